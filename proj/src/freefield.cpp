#include "w3oct/freefield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace w3oct {

namespace {

// boson pairing matrix G = [[2/p,-1/p],[-1/p,2/p]], bosons numbered 1,2
Rational gEntry(int p, int i, int j) {
  return (i == j) ? Rational(2) / p : Rational(-1) / p;
}

// (G mu)_j
Rational gDot(int p, const Momentum& mu, int j) {
  return gEntry(p, j, 1) * mu.c1 + gEntry(p, j, 2) * mu.c2;
}

Rational momComponent(const Momentum& m, int i) { return i == 1 ? m.c1 : m.c2; }

// d_z^a d_w^b log(z-w) = sign (a+b-1)! (z-w)^{-(a+b)}, sign +1 for odd a
Rational dlog(int a, int b) {
  if (a + b < 1) throw std::logic_error("dlog: needs a+b >= 1");
  Rational f = factorialRat(a + b - 1);
  return (a % 2 == 1) ? f : -f;
}

}  // namespace

Rational momentumPairing(int p, const Momentum& mu, const Momentum& nu) {
  return (2 * mu.c1 * nu.c1 + 2 * mu.c2 * nu.c2 - mu.c1 * nu.c2 -
          mu.c2 * nu.c1) /
         p;
}

FieldExpr FieldExpr::unit(int p) {
  FieldExpr x(p);
  x.add(TermKey{}, 1);
  return x;
}

FieldExpr FieldExpr::exponential(int p, const Momentum& m) {
  FieldExpr x(p);
  x.add(TermKey{{}, m}, 1);
  return x;
}

FieldExpr FieldExpr::bosonDeriv(int p, int boson, int order) {
  if (boson != 1 && boson != 2)
    throw std::invalid_argument("bosonDeriv: boson must be 1 or 2");
  if (order < 1) throw std::invalid_argument("bosonDeriv: order must be >= 1");
  FieldExpr x(p);
  x.add(TermKey{{Factor{boson, order}}, Momentum{}}, 1);
  return x;
}

void FieldExpr::add(TermKey key, const Rational& coeff) {
  if (coeff == 0) return;
  std::sort(key.factors.begin(), key.factors.end());
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FieldExpr FieldExpr::operator-() const {
  FieldExpr out(p_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

FieldExpr& FieldExpr::operator+=(const FieldExpr& o) {
  if (p_ != o.p_) throw std::invalid_argument("FieldExpr: mixed p");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

FieldExpr& FieldExpr::operator-=(const FieldExpr& o) {
  if (p_ != o.p_) throw std::invalid_argument("FieldExpr: mixed p");
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

FieldExpr FieldExpr::scaled(const Rational& s) const {
  FieldExpr out(p_);
  if (s == 0) return out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
  return out;
}

bool FieldExpr::operator==(const FieldExpr& o) const {
  return p_ == o.p_ && terms_ == o.terms_;
}

FieldExpr FieldExpr::derivative() const {
  FieldExpr out(p_);
  for (const auto& [key, c] : terms_) {
    for (size_t idx = 0; idx < key.factors.size(); ++idx) {
      TermKey nk = key;
      nk.factors[idx].second += 1;
      out.add(std::move(nk), c);
    }
    for (int i : {1, 2}) {
      Rational mi = momComponent(key.mom, i);
      if (mi != 0) {
        TermKey nk = key;
        nk.factors.push_back(Factor{i, 1});
        out.add(std::move(nk), c * mi);
      }
    }
  }
  return out;
}

bool FieldExpr::isHomogeneous(int degree, const Momentum& mom) const {
  for (const auto& [key, c] : terms_) {
    if (key.mom != mom) return false;
    long deg = 0;
    for (const auto& [i, k] : key.factors) deg += k;
    if (deg != degree) return false;
  }
  return true;
}

bool FieldExpr::proportionalTo(const FieldExpr& b, Rational* ratio) const {
  if (b.isZero()) return false;
  const auto& [key0, c0] = *b.terms().begin();
  auto it = terms_.find(key0);
  Rational r = (it == terms_.end()) ? Rational(0) : it->second / c0;
  if (*this == b.scaled(r)) {
    if (ratio) *ratio = r;
    return true;
  }
  return false;
}

std::string FieldExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << ratStr(c) << ")";
    for (const auto& [i, k] : key.factors) os << " d^" << k << "phi" << i;
    if (!key.mom.isZero())
      os << " exp(" << ratStr(key.mom.c1) << "," << ratStr(key.mom.c2) << ")";
  }
  return os.str();
}

FieldExpr wickProduct(const FieldExpr& a, const FieldExpr& b) {
  if (a.p() != b.p()) throw std::invalid_argument("wickProduct: mixed p");
  FieldExpr out(a.p());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      TermKey k;
      k.factors = ka.factors;
      k.factors.insert(k.factors.end(), kb.factors.begin(), kb.factors.end());
      k.mom = ka.mom + kb.mom;
      out.add(std::move(k), ca * cb);
    }
  return out;
}

namespace {

// Full contraction engine for one pair of normal-ordered monomials.
struct PairOPE {
  int p;
  const std::vector<Factor>& FA;
  const std::vector<Factor>& FB;
  Momentum muA, muB, momsum;
  Rational gA[3], gB[3];
  Rational e0;
  Rational cap;
  std::map<Rational, FieldExpr>* out;

  struct Config {
    long pole;
    Rational val;
    std::vector<Factor> zsurv, wsurv;
  };
  std::vector<Config> configs;

  // per-config scratch
  const Config* cfg = nullptr;
  long budget = 0;
  std::vector<std::pair<int, int>> positions;  // (d, boson)

  PairOPE(int p_, const std::vector<Factor>& fa, const std::vector<Factor>& fb,
          const Momentum& ma, const Momentum& mb, const Rational& cap_,
          std::map<Rational, FieldExpr>* out_)
      : p(p_), FA(fa), FB(fb), muA(ma), muB(mb), momsum(ma + mb), cap(cap_),
        out(out_) {
    for (int i : {1, 2}) {
      gA[i] = gDot(p, muA, i);  // B-factor against the A exponential
      gB[i] = gDot(p, muB, i);  // A-factor against the B exponential
    }
    e0 = momentumPairing(p, muA, muB);
  }

  void run(const Rational& c) {
    std::vector<Factor> zsurv;
    assignA(0, 0, 0, c, zsurv);
    for (const Config& config : configs) {
      Rational budgetF = cap - e0 + config.pole;
      if (budgetF < 0) continue;
      cfg = &config;
      budget = static_cast<long>(ratFloorNonNeg(budgetF));
      positions.clear();
      for (int d = 1; d <= budget; ++d)
        for (int i : {1, 2})
          if (momComponent(muA, i) != 0) positions.emplace_back(d, i);
      std::vector<Factor> facs;
      taylor(0, 0, Rational(1), facs);
    }
  }

  void assignA(size_t idx, unsigned long usedmask, long pole, const Rational& val,
               std::vector<Factor>& zsurv) {
    if (idx == FA.size()) {
      std::vector<Factor> wsurv;
      assignB(0, usedmask, pole, val, zsurv, wsurv);
      return;
    }
    auto [i, a] = FA[idx];
    for (size_t jdx = 0; jdx < FB.size(); ++jdx) {
      if (usedmask & (1ul << jdx)) continue;
      auto [j, b] = FB[jdx];
      assignA(idx + 1, usedmask | (1ul << jdx), pole + a + b,
              val * gEntry(p, i, j) * dlog(a, b), zsurv);
    }
    if (gB[i] != 0)
      assignA(idx + 1, usedmask, pole + a, val * gB[i] * dlog(a, 0), zsurv);
    zsurv.push_back(Factor{i, a});
    assignA(idx + 1, usedmask, pole, val, zsurv);
    zsurv.pop_back();
  }

  void assignB(size_t jdx, unsigned long usedmask, long pole, const Rational& val,
               std::vector<Factor>& zsurv, std::vector<Factor>& wsurv) {
    if (jdx == FB.size()) {
      configs.push_back(Config{pole, val, zsurv, wsurv});
      return;
    }
    if (usedmask & (1ul << jdx)) {
      assignB(jdx + 1, usedmask, pole, val, zsurv, wsurv);
      return;
    }
    auto [j, b] = FB[jdx];
    if (gA[j] != 0)
      assignB(jdx + 1, usedmask, pole + b, val * gA[j] * dlog(0, b), zsurv,
              wsurv);
    wsurv.push_back(Factor{j, b});
    assignB(jdx + 1, usedmask, pole, val, zsurv, wsurv);
    wsurv.pop_back();
  }

  // Taylor-expand the z-side survivors about w.
  void taylor(size_t idx, long tdeg, const Rational& coeff,
              std::vector<Factor>& facs) {
    if (idx == cfg->zsurv.size()) {
      emitExp(0, tdeg, coeff, facs);
      return;
    }
    auto [i, a] = cfg->zsurv[idx];
    Rational c = coeff;
    for (long d = 0; tdeg + d <= budget; ++d) {
      if (d > 0) c /= d;
      facs.push_back(Factor{i, a + static_cast<int>(d)});
      taylor(idx + 1, tdeg + d, c, facs);
      facs.pop_back();
    }
  }

  // Expand exp(muA.(phi(z)-phi(w))) in z-w.
  void emitExp(size_t posidx, long tdeg, const Rational& coeff,
               std::vector<Factor>& facs) {
    if (posidx == positions.size()) {
      finish(tdeg, coeff, facs);
      return;
    }
    auto [d, i] = positions[posidx];
    Rational c = coeff;
    Rational mi = momComponent(muA, i);
    Rational dFac = factorialRat(d);
    long pushed = 0;
    for (long m = 0; tdeg + m * d <= budget; ++m) {
      if (m > 0) {
        c = c * mi / (dFac * m);
        facs.push_back(Factor{i, d});
        ++pushed;
      }
      emitExp(posidx + 1, tdeg + m * d, c, facs);
    }
    for (long rep = 0; rep < pushed; ++rep) facs.pop_back();
  }

  void finish(long tdeg, const Rational& coeff, const std::vector<Factor>& facs) {
    Rational e = e0 - cfg->pole + tdeg;
    TermKey key;
    key.factors = facs;
    key.factors.insert(key.factors.end(), cfg->wsurv.begin(), cfg->wsurv.end());
    key.mom = momsum;
    auto [it, inserted] = out->try_emplace(e, FieldExpr(p));
    it->second.add(std::move(key), cfg->val * coeff);
  }
};

}  // namespace

std::map<Rational, FieldExpr> wickOPE(const FieldExpr& A, const FieldExpr& B,
                                      const Rational& cap) {
  if (A.p() != B.p()) throw std::invalid_argument("wickOPE: mixed p");
  int p = A.p();
  std::map<Rational, FieldExpr> out;
  for (const auto& [ka, ca] : A.terms())
    for (const auto& [kb, cb] : B.terms()) {
      PairOPE engine(p, ka.factors, kb.factors, ka.mom, kb.mom, cap, &out);
      engine.run(ca * cb);
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.isZero() ? out.erase(it) : std::next(it);
  return out;
}

FieldExpr normalProduct(const FieldExpr& A, const FieldExpr& B) {
  auto o = wickOPE(A, B, 0);
  auto it = o.find(Rational(0));
  return it == o.end() ? FieldExpr::zero(A.p()) : it->second;
}

FieldExpr buildT(int p) {
  FieldExpr T(p);
  Rational third(p, 3);
  for (auto [i, j] : {std::pair{1, 1}, {1, 2}, {2, 2}})
    T.add(TermKey{{Factor{i, 1}, Factor{j, 1}}, Momentum{}}, third);
  for (int i : {1, 2})
    T.add(TermKey{{Factor{i, 2}}, Momentum{}}, Rational(-(p - 1)));
  return T;
}

FieldExpr buildW(int p) {
  FieldExpr W(p);
  const int a = 1, b = 2;
  long pm1 = p - 1;
  std::vector<std::pair<std::vector<Factor>, Rational>> rows = {
      {{{a, 1}, {a, 1}, {a, 1}}, Rational(1)},
      {{{a, 1}, {a, 1}, {b, 1}}, Rational(3, 2)},
      {{{a, 1}, {b, 1}, {b, 1}}, Rational(-3, 2)},
      {{{b, 1}, {b, 1}, {b, 1}}, Rational(-1)},
      {{{a, 2}, {a, 1}}, Rational(-9 * pm1, 2 * p)},
      {{{a, 2}, {b, 1}}, Rational(-9 * pm1, 4 * p)},
      {{{b, 2}, {a, 1}}, Rational(9 * pm1, 4 * p)},
      {{{b, 2}, {b, 1}}, Rational(9 * pm1, 2 * p)},
      {{{a, 3}}, Rational(9 * pm1 * pm1, 4l * p * p)},
      {{{b, 3}}, Rational(-9 * pm1 * pm1, 4l * p * p)},
  };
  for (auto& [fs, c] : rows) W.add(TermKey{std::move(fs), Momentum{}}, c);
  return W;
}

Rational centralCharge(int p) {
  return Rational(-2 * (3l * p - 4) * (4l * p - 3), p);
}

Rational dimensionOfVertex(int p, const Momentum& c) {
  return (c.c1 + c.c2) * (Rational(1) - Rational(1, p)) +
         (c.c1 * c.c1 + c.c2 * c.c2 - c.c1 * c.c2) / p;
}

namespace {

FieldExpr opeAt(const std::map<Rational, FieldExpr>& o, int p, long e) {
  auto it = o.find(Rational(e));
  return it == o.end() ? FieldExpr::zero(p) : it->second;
}

bool noPolesBelow(const std::map<Rational, FieldExpr>& o, long lowest) {
  for (const auto& [e, x] : o)
    if (e < lowest) return false;
  return true;
}

}  // namespace

std::vector<Check> ttOPECheck(int p) {
  std::vector<Check> checks;
  FieldExpr T = buildT(p);
  auto tt = wickOPE(T, T, 1);
  Rational c = centralCharge(p);
  checks.push_back(Check{"tt-pole-bound", noPolesBelow(tt, -4),
                         "no singularity stronger than fourth order"});
  checks.push_back(Check{"tt-central-term",
                         opeAt(tt, p, -4) == FieldExpr::unit(p).scaled(c / 2),
                         "fourth-order pole is c/2 with c = " + ratStr(c)});
  checks.push_back(
      Check{"tt-cubic-pole-vanishes", opeAt(tt, p, -3).isZero(), ""});
  checks.push_back(Check{"tt-quadratic-pole",
                         opeAt(tt, p, -2) == T.scaled(2), "2T"});
  checks.push_back(
      Check{"tt-linear-pole", opeAt(tt, p, -1) == T.derivative(), "dT"});
  return checks;
}

std::vector<Check> twOPECheck(int p) {
  std::vector<Check> checks;
  FieldExpr T = buildT(p), W = buildW(p);
  auto tw = wickOPE(T, W, 1);
  checks.push_back(Check{"tw-pole-bound", noPolesBelow(tw, -2),
                         "W is primary: no pole above second order"});
  checks.push_back(
      Check{"tw-quadratic-pole", opeAt(tw, p, -2) == W.scaled(3), "3W"});
  checks.push_back(
      Check{"tw-linear-pole", opeAt(tw, p, -1) == W.derivative(), "dW"});
  return checks;
}

std::vector<Check> wwOPECheck(int p) {
  std::vector<Check> checks;
  FieldExpr T = buildT(p), W = buildW(p);
  auto ww = wickOPE(W, W, 1);
  long pl = p;
  Rational p4 = Rational(pl * pl * pl * pl);

  checks.push_back(Check{"ww-pole-bound", noPolesBelow(ww, -6),
                         "no singularity stronger than sixth order"});
  Rational c6 = Rational(81 * (3 * pl - 5) * (3 * pl - 4) * (4 * pl - 3) *
                         (5 * pl - 3)) /
                (4 * p4 * pl);
  checks.push_back(Check{"ww-identity-term",
                         opeAt(ww, p, -6) == FieldExpr::unit(p).scaled(c6),
                         "sixth-order pole is 81(3p-5)(3p-4)(4p-3)(5p-3)/(4p^5)"});
  checks.push_back(
      Check{"ww-fifth-pole-vanishes", opeAt(ww, p, -5).isZero(), ""});
  Rational c4 = Rational(-243 * (3 * pl - 5) * (5 * pl - 3)) / (4 * p4);
  checks.push_back(Check{"ww-stress-term", opeAt(ww, p, -4) == T.scaled(c4),
                         "-243(3p-5)(5p-3)/(4p^4) T"});
  checks.push_back(Check{"ww-stress-derivative-term",
                         opeAt(ww, p, -3) == T.derivative().scaled(c4 / 2),
                         "half the fourth-order coefficient times dT"});
  FieldExpr ttComposite = normalProduct(T, T);
  FieldExpr dttComposite = normalProduct(T.derivative(), T);
  FieldExpr d2T = T.derivative().derivative();
  Rational pm1sq = Rational((pl - 1) * (pl - 1));
  FieldExpr want2 = (ttComposite.scaled(Rational(8 * pl)) -
                     d2T.scaled(9 * pm1sq))
                        .scaled(Rational(243) / (16 * p4));
  checks.push_back(Check{"ww-quadratic-pole", opeAt(ww, p, -2) == want2,
                         "243/(16p^4) (8p (TT) - 9(p-1)^2 d2T)"});
  FieldExpr want1 = (dttComposite.scaled(Rational(4 * pl)) -
                     d2T.derivative().scaled(pm1sq))
                        .scaled(Rational(243) / (8 * p4));
  checks.push_back(Check{"ww-linear-pole", opeAt(ww, p, -1) == want1,
                         "243/(8p^4) (4p (dT T) - (p-1)^2 d3T)"});
  return checks;
}

}  // namespace w3oct
