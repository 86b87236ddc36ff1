#include "w3oct/octuplet.hpp"

#include <utility>

#include "w3oct/screening.hpp"

namespace w3oct {

namespace {

FieldExpr opeAt(const std::map<Rational, FieldExpr>& o, int p, const Rational& e) {
  auto it = o.find(e);
  return it == o.end() ? FieldExpr::zero(p) : it->second;
}

Check boolCheck(std::string name, bool pass, std::string okDetail, std::string badDetail) {
  Check c;
  c.name = std::move(name);
  c.pass = pass;
  c.detail = pass ? std::move(okDetail) : std::move(badDetail);
  return c;
}

// Leading (most singular) exponent, or nullopt-ish flag via pointer.
bool leadingTerm(const std::map<Rational, FieldExpr>& o, Rational* e, FieldExpr* x) {
  if (o.empty()) return false;
  *e = o.begin()->first;
  *x = o.begin()->second;
  return true;
}

}  // namespace

OctupletResult octupletChain(int p) {
  OctupletResult res;
  Momentum ea = longMomentum(p, 1), eb = longMomentum(p, 2);
  FieldExpr T = buildT(p), W3 = buildW(p);

  FieldExpr seed = FieldExpr::exponential(p, Momentum{p, p});
  res.fields["W"] = seed;
  res.fields["Wb"] = screeningResidue(p, eb, seed);
  res.fields["Wa"] = screeningResidue(p, ea, seed);
  res.fields["Wab"] = screeningResidue(p, ea, res.fields["Wb"]);
  res.fields["Wba"] = screeningResidue(p, eb, res.fields["Wa"]);
  res.fields["Wbab"] = screeningResidue(p, eb, res.fields["Wab"]);
  res.fields["Waba"] = screeningResidue(p, ea, res.fields["Wba"]);
  res.fields["Waabb"] = screeningResidue(p, ea, res.fields["Wbab"]);
  FieldExpr endpointViaB = screeningResidue(p, eb, res.fields["Waba"]);

  struct Shape {
    const char* name;
    int degree;
    Momentum mom;
  };
  const Shape shapes[] = {
      {"W", 0, Momentum{p, p}},
      {"Wb", p - 1, Momentum{p, 0}},
      {"Wa", p - 1, Momentum{0, p}},
      {"Wab", 3 * p - 2, Momentum{0, 0}},
      {"Wba", 3 * p - 2, Momentum{0, 0}},
      {"Wbab", 3 * p - 3, Momentum{0, -p}},
      {"Waba", 3 * p - 3, Momentum{-p, 0}},
      {"Waabb", 4 * p - 4, Momentum{-p, -p}},
  };
  const Rational dim = 3 * p - 2;

  for (const auto& sh : shapes) {
    const FieldExpr& X = res.fields[sh.name];
    std::string base(sh.name);

    res.checks.push_back(boolCheck(base + "-nonzero", !X.isZero(),
                                   std::to_string(X.terms().size()) + " terms",
                                   "field vanished"));
    res.checks.push_back(boolCheck(
        base + "-shape", X.isHomogeneous(sh.degree, sh.mom),
        "degree " + std::to_string(sh.degree) + " polynomial times e^{(" +
            ratStr(sh.mom.c1) + "," + ratStr(sh.mom.c2) + ").phi}",
        "not homogeneous of the expected degree/momentum"));

    auto tx = wickOPE(T, X, 1);
    bool bounded = true;
    for (const auto& [e, coeff] : tx)
      if (e < -2) bounded = false;
    bool primary = bounded && opeAt(tx, p, -2) == X.scaled(dim) &&
                   opeAt(tx, p, -1) == X.derivative();
    res.checks.push_back(boolCheck(base + "-spin2-primary", primary,
                                   "dimension " + ratStr(dim) + " primary",
                                   "spin-2 OPE deviates from primary form"));

    auto wx = wickOPE(W3, X, 1);
    bool wBounded = true;
    for (const auto& [e, coeff] : wx)
      if (e < -3) wBounded = false;
    bool wPrimary = wBounded && opeAt(wx, p, -3).isZero();
    res.checks.push_back(boolCheck(base + "-spin3-primary", wPrimary,
                                   "poles bounded by 3 with zero cubic eigenvalue",
                                   "spin-3 OPE deviates from primary form"));

    bool kernel = screeningResidue(p, shortMomentum(p, 1), X).isZero() &&
                  screeningResidue(p, shortMomentum(p, 2), X).isZero();
    res.checks.push_back(boolCheck(base + "-short-kernel", kernel,
                                   "annihilated by both short screenings",
                                   "short-screening residue survives"));
  }

  res.checks.push_back(boolCheck(
      "zero-arrows",
      screeningResidue(p, eb, res.fields["Wb"]).isZero() &&
          screeningResidue(p, ea, res.fields["Wa"]).isZero() &&
          screeningResidue(p, eb, res.fields["Wbab"]).isZero() &&
          screeningResidue(p, ea, res.fields["Waba"]).isZero(),
      "all four diagram zero-arrows vanish", "a diagram zero-arrow survives"));

  res.checks.push_back(boolCheck(
      "endpoint-arrows",
      screeningResidue(p, ea, res.fields["Waabb"]).isZero() &&
          screeningResidue(p, eb, res.fields["Waabb"]).isZero(),
      "both long screenings annihilate the endpoint", "endpoint arrow survives"));

  Rational lambda;
  bool closed = endpointViaB.proportionalTo(res.fields["Waabb"], &lambda) && lambda != 0;
  res.closureRatio = closed ? lambda : Rational(0);
  res.checks.push_back(boolCheck("endpoint-closure", closed,
                                 "second route = " + ratStr(lambda) + " * first route",
                                 "endpoint routes disagree"));

  Rational r1, r2;
  bool dashed =
      screeningResidue(p, eb, res.fields["Wba"]).proportionalTo(res.fields["Wbab"], &r1) &&
      r1 != 0 &&
      screeningResidue(p, ea, res.fields["Wab"]).proportionalTo(res.fields["Waba"], &r2) &&
      r2 != 0;
  res.checks.push_back(boolCheck("dashed-arrows", dashed,
                                 "factors " + ratStr(r1) + " and " + ratStr(r2),
                                 "a dashed arrow misses its target"));
  return res;
}

std::vector<Check> octupletOPEStructure(int p) {
  std::vector<Check> out;
  OctupletResult chain = octupletChain(p);
  const auto& F = chain.fields;
  FieldExpr T = buildT(p);
  const Rational sign = (p % 2 == 0) ? -1 : 1;  // (-1)^{p+1}

  // Seed against endpoint: identity channel, spin-2 channel, half-strength
  // derivative, and no spin-3 admixture.
  auto o = wickOPE(F.at("W"), F.at("Waabb"), 1);
  Rational c1;
  bool idOk = opeAt(o, p, -(6 * p - 4)).proportionalTo(FieldExpr::unit(p), &c1) && c1 != 0;
  out.push_back(boolCheck("seed-endpoint-identity-channel", idOk,
                          "identity coefficient " + ratStr(c1) + " at pole order " +
                              std::to_string(6 * p - 4),
                          "leading channel is not a nonzero multiple of the identity"));
  out.push_back(boolCheck("seed-endpoint-subleading-gap", opeAt(o, p, -(6 * p - 5)).isZero(),
                          "no channel at pole order " + std::to_string(6 * p - 5),
                          "unexpected channel below the identity pole"));
  Rational c2;
  bool tOk = opeAt(o, p, -(6 * p - 6)).proportionalTo(T, &c2) && c2 != 0;
  out.push_back(boolCheck("seed-endpoint-spin2-channel", tOk,
                          "spin-2 coefficient " + ratStr(c2) + " at pole order " +
                              std::to_string(6 * p - 6),
                          "order-(6p-6) channel is not a multiple of the spin-2 current"));
  bool dtOk = tOk && opeAt(o, p, -(6 * p - 7)) == T.derivative().scaled(c2 / 2);
  out.push_back(boolCheck("seed-endpoint-derivative-half", dtOk,
                          "exactly (spin-2 coefficient)/2 times the derivative, "
                          "with no spin-3 admixture",
                          "order-(6p-7) channel deviates"));

  // The two cross pairs follow the same profile up to the parity sign.
  struct Cross {
    const char* name;
    const char* a;
    const char* b;
  };
  for (const Cross& cr : {Cross{"cross-a", "Wa", "Wbab"}, Cross{"cross-b", "Wb", "Waba"}}) {
    auto oc = wickOPE(F.at(cr.a), F.at(cr.b), 1);
    Rational ci, ct;
    bool ok = opeAt(oc, p, -(6 * p - 4)).proportionalTo(FieldExpr::unit(p), &ci) &&
              ci == sign * c1 &&
              opeAt(oc, p, -(6 * p - 6)).proportionalTo(T, &ct) && ct == sign * c2 &&
              opeAt(oc, p, -(6 * p - 7)) == T.derivative().scaled(sign * c2 / 2);
    out.push_back(boolCheck(std::string(cr.name) + "-sign-pattern", ok,
                            "identity/spin-2/derivative channels carry the parity sign " +
                                ratStr(sign),
                            "cross-pair channels break the parity sign pattern"));
  }

  // Wa x Wb fuses back onto the seed at the top pole order.
  {
    auto of = wickOPE(F.at("Wa"), F.at("Wb"), 1);
    Rational e, r;
    FieldExpr lead(p);
    bool ok = leadingTerm(of, &e, &lead) && e == -(3 * p - 2) &&
              lead.proportionalTo(F.at("W"), &r) && r != 0;
    out.push_back(boolCheck("wa-wb-fusion", ok,
                            "leading channel " + ratStr(r) + " * seed at pole order " +
                                std::to_string(3 * p - 2),
                            "fusion channel missing or misplaced"));
  }

  // Same-side pairs are regular.
  out.push_back(boolCheck("wa-waba-regular", wickOPE(F.at("Wa"), F.at("Waba"), 0).empty(),
                          "vanishes to first order", "singular or constant part survives"));
  out.push_back(boolCheck("wb-wbab-regular", wickOPE(F.at("Wb"), F.at("Wbab"), 0).empty(),
                          "vanishes to first order", "singular or constant part survives"));

  // The two degree-(3p-3) fields fuse onto the endpoint.
  {
    auto of = wickOPE(F.at("Waba"), F.at("Wbab"), 1);
    Rational e, r;
    FieldExpr lead(p);
    bool ok = leadingTerm(of, &e, &lead) && e == -(3 * p - 2) &&
              lead.proportionalTo(F.at("Waabb"), &r) && r != 0;
    out.push_back(boolCheck("waba-wbab-fusion", ok,
                            "leading channel " + ratStr(r) + " * endpoint at pole order " +
                                std::to_string(3 * p - 2),
                            "fusion channel missing or misplaced"));
  }
  return out;
}

}  // namespace w3oct
