#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "w3oct/octuplet.hpp"
#include "w3oct/screening.hpp"

using namespace w3oct;

namespace {

FieldExpr opeTerm(const std::map<Rational, FieldExpr>& o, int p, const Rational& e) {
  auto it = o.find(e);
  return it == o.end() ? FieldExpr::zero(p) : it->second;
}

}  // namespace

TEST_CASE("octuplet chain at p=2") {
  int p = 2;
  OctupletResult res = octupletChain(p);

  REQUIRE(res.fields.size() == 8);
  for (const auto& c : res.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
  // 8 fields x 5 per-field checks + 4 chain-level checks.
  CHECK(res.checks.size() == 44);

  // Frozen term counts of the eight members.
  const std::map<std::string, size_t> wantTerms = {
      {"W", 1},   {"Wb", 1},   {"Wa", 1},   {"Wab", 8},
      {"Wba", 8}, {"Wbab", 5}, {"Waba", 5}, {"Waabb", 10}};
  for (const auto& [name, n] : wantTerms) {
    INFO(name);
    CHECK(res.fields.at(name).terms().size() == n);
  }

  // The one-step members in closed form: -2 dphi_2 e^{2 phi_1} and its mirror.
  FieldExpr wb = wickProduct(FieldExpr::bosonDeriv(p, 2, 1),
                             FieldExpr::exponential(p, Momentum{2, 0}))
                     .scaled(-2);
  FieldExpr wa = wickProduct(FieldExpr::bosonDeriv(p, 1, 1),
                             FieldExpr::exponential(p, Momentum{0, 2}))
                     .scaled(-2);
  CHECK(res.fields.at("Wb") == wb);
  CHECK(res.fields.at("Wa") == wa);

  CHECK(res.closureRatio == 1);

  // Dashed arrows land with factor +2 at p=2.
  Rational r1, r2;
  REQUIRE(screeningResidue(p, longMomentum(p, 2), res.fields.at("Wba"))
              .proportionalTo(res.fields.at("Wbab"), &r1));
  REQUIRE(screeningResidue(p, longMomentum(p, 1), res.fields.at("Wab"))
              .proportionalTo(res.fields.at("Waba"), &r2));
  CHECK(r1 == 2);
  CHECK(r2 == 2);
}

TEST_CASE("octuplet chain at p=3") {
  int p = 3;
  OctupletResult res = octupletChain(p);
  for (const auto& c : res.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
  CHECK(res.closureRatio == 1);

  // Dashed arrows land with factor -2 at p=3.
  Rational r1;
  REQUIRE(screeningResidue(p, longMomentum(p, 2), res.fields.at("Wba"))
              .proportionalTo(res.fields.at("Wbab"), &r1));
  CHECK(r1 == -2);
}

TEST_CASE("octuplet OPE structure at p=2") {
  int p = 2;
  std::vector<Check> checks = octupletOPEStructure(p);
  CHECK(checks.size() == 10);
  for (const auto& c : checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }

  // Freeze the actual channel coefficients.
  OctupletResult res = octupletChain(p);
  const auto& F = res.fields;
  FieldExpr T = buildT(p);
  FieldExpr unit = FieldExpr::unit(p);

  auto o = wickOPE(F.at("W"), F.at("Waabb"), 1);
  CHECK(opeTerm(o, p, -8) == unit.scaled(60));
  CHECK(opeTerm(o, p, -7).isZero());
  CHECK(opeTerm(o, p, -6) == T.scaled(-48));
  CHECK(opeTerm(o, p, -5) == T.derivative().scaled(-24));

  auto oc = wickOPE(F.at("Wa"), F.at("Wbab"), 1);
  CHECK(opeTerm(oc, p, -8) == unit.scaled(-60));
  CHECK(opeTerm(oc, p, -6) == T.scaled(48));
  CHECK(opeTerm(oc, p, -5) == T.derivative().scaled(24));

  auto of = wickOPE(F.at("Wa"), F.at("Wb"), 1);
  CHECK(opeTerm(of, p, -4) == F.at("W").scaled(-18));

  auto og = wickOPE(F.at("Waba"), F.at("Wbab"), 1);
  CHECK(opeTerm(og, p, -4) == F.at("Waabb").scaled(-18));
}
