#pragma once

#include <json.hpp>

#include <stdexcept>

#include "w3oct/braided.hpp"
#include "w3oct/cyclotomic.hpp"
#include "w3oct/freefield.hpp"
#include "w3oct/nichols.hpp"

namespace w3oct {

using nlohmann::json;

inline json ratToJson(const Rational& x) {
  Int n = numerator(x), d = denominator(x);
  // Desk-scale values fit comfortably in 64 bits; fail loudly otherwise
  // rather than silently rounding.
  if (n < std::numeric_limits<long long>::min() || n > std::numeric_limits<long long>::max() ||
      d > std::numeric_limits<long long>::max())
    throw std::range_error("rational too large for JSON encoding: " + ratStr(x));
  return json::array({static_cast<long long>(n), static_cast<long long>(d)});
}

inline Rational ratFromJson(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational JSON must be [num, den]");
  return Rational(Int(j[0].get<long long>()), Int(j[1].get<long long>()));
}

inline json cycNumToJson(const CycNum& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(ratToJson(c));
  return json{{"p", x.p()}, {"coeffs", coeffs}};
}

inline CycNum cycNumFromJson(const json& j) {
  int p = j.at("p").get<int>();
  std::vector<Rational> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(ratFromJson(c));
  return CycNum(p, std::move(cs));
}

inline json tensorElemToJson(const TensorElem& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) {
    json word = json::array();
    for (auto l : w) word.push_back(static_cast<int>(l));
    terms.push_back(json{{"word", word}, {"coeff", cycNumToJson(c)}});
  }
  return json{{"p", x.p()}, {"terms", terms}};
}

inline TensorElem tensorElemFromJson(const json& j) {
  TensorElem out(j.at("p").get<int>());
  for (const auto& t : j.at("terms")) {
    Word w;
    for (const auto& l : t.at("word")) w.push_back(static_cast<unsigned char>(l.get<int>()));
    out.add(w, cycNumFromJson(t.at("coeff")));
  }
  return out;
}

inline json nicholsElemToJson(const NicholsElem& x) {
  json terms = json::array();
  for (const auto& [i, c] : x.terms())
    terms.push_back(json{{"r", i.r}, {"t", i.t}, {"s", i.s}, {"coeff", cycNumToJson(c)}});
  return json{{"p", x.p()}, {"terms", terms}};
}

inline NicholsElem nicholsElemFromJson(const json& j) {
  NicholsElem out(j.at("p").get<int>());
  for (const auto& t : j.at("terms"))
    out.add(PbwIndex{t.at("r").get<int>(), t.at("t").get<int>(), t.at("s").get<int>()},
            cycNumFromJson(t.at("coeff")));
  return out;
}

inline json fieldExprToJson(const FieldExpr& x) {
  json terms = json::array();
  for (const auto& [k, c] : x.terms()) {
    json factors = json::array();
    for (const auto& [i, d] : k.factors) factors.push_back(json::array({i, d}));
    terms.push_back(json{{"coeff", ratToJson(c)},
                         {"factors", factors},
                         {"momentum", json::array({ratToJson(k.mom.c1), ratToJson(k.mom.c2)})}});
  }
  return json{{"p", x.p()}, {"terms", terms}};
}

inline FieldExpr fieldExprFromJson(const json& j) {
  FieldExpr out(j.at("p").get<int>());
  for (const auto& t : j.at("terms")) {
    TermKey key;
    for (const auto& f : t.at("factors"))
      key.factors.emplace_back(f[0].get<int>(), f[1].get<int>());
    key.mom = Momentum{ratFromJson(t.at("momentum")[0]), ratFromJson(t.at("momentum")[1])};
    out.add(std::move(key), ratFromJson(t.at("coeff")));
  }
  return out;
}

}  // namespace w3oct
