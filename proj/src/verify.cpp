#include "w3oct/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "w3oct/braided.hpp"
#include "w3oct/cyclotomic.hpp"
#include "w3oct/freefield.hpp"
#include "w3oct/nichols.hpp"
#include "w3oct/screening.hpp"
#include "w3oct/ydmod.hpp"

namespace w3oct {

namespace {

std::vector<PbwIndex> fullBasis(int p) {
  std::vector<PbwIndex> out;
  for (int r = 0; r < p; ++r)
    for (int t = 0; t < p; ++t)
      for (int s = 0; s < p; ++s) out.push_back(PbwIndex{r, t, s});
  return out;
}

PbwIndex randomIndex(int p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, p - 1);
  return PbwIndex{d(rng), d(rng), d(rng)};
}

// <r>! <t>! <s>! (1-q^2)^t, the rescale between the two product conventions.
CycNum pbwNorm(int p, const PbwIndex& i) {
  CycNum n = qFac(p, i.r) * qFac(p, i.t) * qFac(p, i.s);
  CycNum om = CycNum::one(p) - qPower(p, 2);
  for (int k = 0; k < i.t; ++k) n *= om;
  return n;
}

NicholsElem rescaleByNorm(const NicholsElem& x) {
  NicholsElem out(x.p());
  for (const auto& [i, c] : x.terms()) out.add(i, c * pbwNorm(x.p(), i));
  return out;
}

// Triple-tensor accumulation keyed by PBW index triples, used for the
// coassociativity comparison.
using Key3 = std::tuple<PbwIndex, PbwIndex, PbwIndex>;

void addK3(std::map<Key3, CycNum>& m, const Key3& k, const CycNum& c) {
  auto it = m.find(k);
  if (it == m.end()) {
    if (!c.isZero()) m.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) m.erase(it);
}

Check boolCheck(std::string name, bool pass, std::string okDetail, std::string badDetail) {
  Check c;
  c.name = std::move(name);
  c.pass = pass;
  c.detail = pass ? std::move(okDetail) : std::move(badDetail);
  return c;
}

}  // namespace

Check oracleEquivalenceCheck(int p, int gradeBound) {
  long pairs = 0;
  for (const auto& a : fullBasis(p)) {
    if (a.grade() > gradeBound) continue;
    TensorElem ta = toTensor(NicholsElem::basis(p, a), gradeBound);
    for (const auto& b : fullBasis(p)) {
      if (a.grade() + b.grade() > gradeBound) continue;
      TensorElem tb = toTensor(NicholsElem::basis(p, b), gradeBound);
      NicholsElem prod = multiplyShuffle(NicholsElem::basis(p, a), NicholsElem::basis(p, b));
      TensorElem lhs = toTensor(prod, gradeBound);
      TensorElem rhs = shuffleProduct(ta, tb);
      if (!(lhs == rhs))
        return boolCheck("oracle-equivalence", false, "",
                         "closed form disagrees with the symmetrizer oracle at " + pbwStr(a) +
                             " * " + pbwStr(b));
      ++pairs;
    }
  }
  return boolCheck("oracle-equivalence", true,
                   "closed-form product matches the symmetrizer oracle on " +
                       std::to_string(pairs) + " pairs with grade <= " +
                       std::to_string(gradeBound),
                   "");
}

Check normalizationEquivalenceCheck(int p) {
  long pairs = 0;
  for (const auto& a : fullBasis(p)) {
    for (const auto& b : fullBasis(p)) {
      NicholsElem ea = NicholsElem::basis(p, a), eb = NicholsElem::basis(p, b);
      NicholsElem lhs = multiplyShuffle(ea, eb).scaled(pbwNorm(p, a) * pbwNorm(p, b));
      NicholsElem rhs = rescaleByNorm(multiplyConcat(ea, eb));
      if (!(lhs == rhs))
        return boolCheck("normalization-equivalence", false, "",
                         "the two product conventions disagree at " + pbwStr(a) + " * " +
                             pbwStr(b));
      ++pairs;
    }
  }
  return boolCheck("normalization-equivalence", true,
                   "both product conventions agree on all " + std::to_string(pairs) +
                       " basis pairs",
                   "");
}

Check associativityCheck(int p, bool shuffleNormalization, int triples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto mul = shuffleNormalization ? &multiplyShuffle : &multiplyConcat;
  const char* label = shuffleNormalization ? "associativity-shuffle" : "associativity-concat";
  for (int k = 0; k < triples; ++k) {
    NicholsElem a = NicholsElem::basis(p, randomIndex(p, rng));
    NicholsElem b = NicholsElem::basis(p, randomIndex(p, rng));
    NicholsElem c = NicholsElem::basis(p, randomIndex(p, rng));
    if (!(mul(mul(a, b), c) == mul(a, mul(b, c))))
      return boolCheck(label, false, "", "associativity fails on a sampled triple");
  }
  return boolCheck(label, true,
                   "associative on " + std::to_string(triples) + " random basis triples", "");
}

std::vector<Check> hopfChecks(int p, int samplePairs, std::uint64_t seed) {
  std::vector<Check> out;
  std::vector<PbwIndex> basis = fullBasis(p);

  // Coassociativity and the counit laws on every basis element.
  bool coassoc = true, counitLaw = true;
  for (const auto& i : basis) {
    NicholsElem x = NicholsElem::basis(p, i);
    NicholsTensor2 dx = coproduct(x);

    std::map<Key3, CycNum> left, right;
    for (const auto& [key, c] : dx.terms()) {
      NicholsTensor2 dl = coproduct(NicholsElem::basis(p, key.first));
      for (const auto& [lkey, lc] : dl.terms())
        addK3(left, Key3{lkey.first, lkey.second, key.second}, c * lc);
      NicholsTensor2 dr = coproduct(NicholsElem::basis(p, key.second));
      for (const auto& [rkey, rc] : dr.terms())
        addK3(right, Key3{key.first, rkey.first, rkey.second}, c * rc);
    }
    if (left != right) coassoc = false;

    NicholsElem viaLeft(p), viaRight(p);
    for (const auto& [key, c] : dx.terms()) {
      viaLeft.add(key.second, c * counit(NicholsElem::basis(p, key.first)));
      viaRight.add(key.first, c * counit(NicholsElem::basis(p, key.second)));
    }
    if (!(viaLeft == x) || !(viaRight == x)) counitLaw = false;
  }
  out.push_back(boolCheck("coassociativity", coassoc, "holds on the full basis",
                          "coassociativity fails"));
  out.push_back(boolCheck("counit-laws", counitLaw, "both counit laws hold on the full basis",
                          "a counit law fails"));

  // Coproduct is an algebra map; all pairs at p=2, a seeded sample otherwise.
  {
    std::mt19937_64 rng(seed);
    bool homo = true;
    long tried = 0;
    auto tryPair = [&](const PbwIndex& a, const PbwIndex& b) {
      NicholsElem ea = NicholsElem::basis(p, a), eb = NicholsElem::basis(p, b);
      NicholsTensor2 lhs = coproduct(multiplyShuffle(ea, eb));
      NicholsTensor2 rhs = multiplyTensor2(coproduct(ea), coproduct(eb));
      if (!(lhs == rhs)) homo = false;
      ++tried;
    };
    if (static_cast<long>(basis.size()) * static_cast<long>(basis.size()) <=
        static_cast<long>(samplePairs)) {
      for (const auto& a : basis)
        for (const auto& b : basis) tryPair(a, b);
    } else {
      for (int k = 0; k < samplePairs; ++k) tryPair(randomIndex(p, rng), randomIndex(p, rng));
    }
    out.push_back(boolCheck("coproduct-homomorphism", homo,
                            "algebra map on " + std::to_string(tried) + " pairs",
                            "the coproduct is not an algebra map"));
  }

  // Both antipode axioms: mul (S x id) Delta = unit . counit = mul (id x S) Delta.
  bool axioms = true;
  for (const auto& i : basis) {
    NicholsElem x = NicholsElem::basis(p, i);
    NicholsTensor2 dx = coproduct(x);
    NicholsElem viaLeft(p), viaRight(p);
    for (const auto& [key, c] : dx.terms()) {
      viaLeft += multiplyShuffle(antipode(NicholsElem::basis(p, key.first)),
                                 NicholsElem::basis(p, key.second))
                     .scaled(c);
      viaRight += multiplyShuffle(NicholsElem::basis(p, key.first),
                                  antipode(NicholsElem::basis(p, key.second)))
                      .scaled(c);
    }
    NicholsElem want = NicholsElem::unit(p).scaled(counit(x));
    if (!(viaLeft == want) || !(viaRight == want)) axioms = false;
  }
  out.push_back(boolCheck("antipode-axioms", axioms, "both axioms hold on the full basis",
                          "an antipode axiom fails"));

  // Closed forms vs the antipode derived from the axiom by grade recursion:
  // S(x) = -x - sum of S(x') * x'' over the proper part of the coproduct.
  {
    std::map<PbwIndex, NicholsElem> derived;
    std::vector<PbwIndex> byGrade = basis;
    std::sort(byGrade.begin(), byGrade.end(), [](const PbwIndex& a, const PbwIndex& b) {
      return std::tuple{a.grade(), a} < std::tuple{b.grade(), b};
    });
    bool match = true;
    for (const auto& i : byGrade) {
      NicholsElem x = NicholsElem::basis(p, i);
      NicholsElem s(p);
      if (i.grade() == 0) {
        s = NicholsElem::unit(p);
      } else {
        s = -x;
        NicholsTensor2 dx = coproduct(x);
        for (const auto& [key, c] : dx.terms()) {
          if (key.first.grade() == 0 || key.first.grade() == i.grade()) continue;
          s -= multiplyShuffle(derived.at(key.first), NicholsElem::basis(p, key.second))
                   .scaled(c);
        }
      }
      derived.emplace(i, s);
      if (!(antipode(x) == s)) match = false;
    }
    out.push_back(boolCheck("antipode-closed-form", match,
                            "matches the axiom-derived antipode on the full basis",
                            "closed form deviates from the axiom-derived antipode"));
  }
  return out;
}

std::vector<YdDimRow> ydmodDimsTable(int p, int range) {
  std::vector<YdDimRow> out;
  for (int n1 = 1; n1 <= range; ++n1)
    for (int n2 = 1; n2 <= range; ++n2)
      out.push_back(YdDimRow{n1, n2, simpleModule(p, n1, n2).dim, dimFormula(p, n1, n2)});
  return out;
}

Check ydmodDimsCheck(int p, int range) {
  for (const auto& row : ydmodDimsTable(p, range)) {
    if (row.computed != row.formula)
      return boolCheck("ydmod-dimensions", false, "",
                       "generated dimension " + std::to_string(row.computed) +
                           " != closed form " + std::to_string(row.formula) + " at (" +
                           std::to_string(row.n1) + "," + std::to_string(row.n2) + ")");
  }
  return boolCheck("ydmod-dimensions", true,
                   "generated module dimension equals the closed form on the " +
                       std::to_string(range) + "x" + std::to_string(range) + " label grid",
                   "");
}

Check vertexDimensionRowCheck(int p) {
  struct Entry {
    Momentum c;
    long want;
  };
  const Entry row[] = {{Momentum{2, 1}, 3},
                       {Momentum{1, 2}, 3},
                       {Momentum{p, 0}, 2L * p - 1},
                       {Momentum{p, p}, 3L * p - 2},
                       {Momentum{0, p}, 2L * p - 1}};
  for (const auto& e : row) {
    if (dimensionOfVertex(p, e.c) != e.want)
      return boolCheck("vertex-dimension-row", false, "",
                       "dimension of e^{(" + ratStr(e.c.c1) + "," + ratStr(e.c.c2) +
                           ").phi} differs from " + std::to_string(e.want));
  }
  return boolCheck("vertex-dimension-row", true, "the five marked momenta give (3, 3, " +
                       std::to_string(2 * p - 1) + ", " + std::to_string(3 * p - 2) + ", " +
                       std::to_string(2 * p - 1) + ")",
                   "");
}

Check stateFieldCheck(int p, int range) {
  for (int n1 = 1; n1 <= range; ++n1) {
    for (int n2 = 1; n2 <= range; ++n2) {
      StateField sf = stateField(p, n1, n2);
      Rational closed = Rational(p - n1 - n2) +
                        Rational(n1 * n1 + n1 * n2 + n2 * n2, 3 * p) -
                        Rational((p - 1) * (p - 1), p);
      bool ok = sf.delta == closed && sf.delta == hwL0(p, sf.hw) &&
                sf.hw == HwParams{p - n1, p - n2} && xyFromMomentum(p, sf.mom) == sf.hw;
      if (!ok)
        return boolCheck("state-field-dimensions", false, "",
                         "label (" + std::to_string(n1) + "," + std::to_string(n2) +
                             ") breaks the dimension identity");
    }
  }
  return boolCheck("state-field-dimensions", true,
                   "label formula = vertex dimension = highest-weight eigenvalue on the " +
                       std::to_string(range) + "x" + std::to_string(range) + " grid",
                   "");
}

std::vector<Check> verifyNichols(int p, int gradeBound) {
  std::vector<Check> out;
  out.push_back(oracleEquivalenceCheck(p, gradeBound));
  out.push_back(normalizationEquivalenceCheck(p));
  out.push_back(associativityCheck(p, true, 200, 2024));
  out.push_back(associativityCheck(p, false, 200, 2025));
  for (auto& c : hopfChecks(p)) out.push_back(std::move(c));
  for (auto& c : serreCheck(p)) out.push_back(std::move(c));
  return out;
}

std::vector<Check> verifyYdmod(int p) {
  std::vector<Check> out;
  out.push_back(ydmodDimsCheck(p, 2 * p));
  for (auto [n1, n2] : {std::pair<int, int>{1, 1}, {2, 1}, {p, p}, {2 * p, 3}})
    for (auto& c : moduleAxiomCheck(p, n1, n2)) {
      c.name += " (" + std::to_string(n1) + "," + std::to_string(n2) + ")";
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<Check> verifyCft(int p) {
  std::vector<Check> out;
  for (auto& c : ttOPECheck(p)) out.push_back(std::move(c));
  for (auto& c : twOPECheck(p)) out.push_back(std::move(c));
  for (auto& c : wwOPECheck(p)) out.push_back(std::move(c));
  for (auto& c : shortScreeningKernel(p)) out.push_back(std::move(c));
  for (auto& c : longScreeningCommutes(p)) out.push_back(std::move(c));
  out.push_back(vertexDimensionRowCheck(p));
  out.push_back(stateFieldCheck(p, 2 * p));
  return out;
}

}  // namespace w3oct
