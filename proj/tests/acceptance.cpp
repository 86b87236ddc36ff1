// Acceptance gate: thirteen exact-arithmetic criteria covering the finite
// quantum-group half (products, Hopf structure, ideal), the one-vertex
// modules, and the two-boson screening kernel (currents, screenings,
// singular-vector bookkeeping, octuplet). Prints one pass/fail line per
// criterion; exits nonzero if any criterion fails.

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "w3oct/checks.hpp"
#include "w3oct/nichols.hpp"
#include "w3oct/octuplet.hpp"
#include "w3oct/screening.hpp"
#include "w3oct/verify.hpp"
#include "w3oct/ydmod.hpp"

using namespace w3oct;

namespace {

bool g_allPass = true;

void criterion(const std::string& id, bool pass, const std::string& msg,
               const std::vector<std::string>& details = {}) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ": " << msg << "\n";
  for (const auto& d : details) std::cout << "       " << d << "\n";
  if (!pass) g_allPass = false;
}

// Collapse a sweep of named checks into one criterion verdict, collecting
// failing check names for the detail lines.
struct Sweep {
  bool pass = true;
  std::vector<std::string> failures;
  void feed(int p, const std::vector<Check>& cs) {
    for (const auto& c : cs) {
      if (!c.pass) {
        pass = false;
        failures.push_back("p=" + std::to_string(p) + " " + c.name + ": " + c.detail);
      }
    }
  }
  void feed(int p, const Check& c) { feed(p, std::vector<Check>{c}); }
};

std::string levelsStr(const std::vector<long>& ls) {
  std::string out = "{";
  for (size_t i = 0; i < ls.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ls[i]);
  }
  return out + "}";
}

}  // namespace

int main() {
  // 1. Closed-form shuffle product vs the brute-force symmetrizer oracle.
  {
    Sweep s;
    for (int p : {2, 3, 4, 5}) s.feed(p, oracleEquivalenceCheck(p, 8));
    criterion("A01 product oracle equivalence (grade <= 8, p in {2,3,4,5})", s.pass,
              s.pass ? "closed form matches the symmetrizer oracle on every PBW pair"
                     : "closed form deviates from the symmetrizer oracle",
              s.failures);
  }

  // 2. The two product normalizations define the same algebra; associativity.
  {
    Sweep s;
    for (int p : {2, 3}) {
      s.feed(p, normalizationEquivalenceCheck(p));
      s.feed(p, associativityCheck(p, true, 1000, 90210 + p));
      s.feed(p, associativityCheck(p, false, 1000, 60201 + p));
    }
    criterion("A02 product-table consistency (full basis + 1000 random triples, p in {2,3})",
              s.pass,
              s.pass ? "both normalizations agree under the rescale; both are associative"
                     : "product conventions disagree or associativity fails",
              s.failures);
  }

  // 3. Hopf structure: coassociativity, algebra-map coproduct, antipode
  //    axioms, and closed-form antipode, all on the full basis.
  {
    Sweep s;
    for (int p : {2, 3}) s.feed(p, hopfChecks(p, /*samplePairs=*/1000000));
    criterion("A03 Hopf structure (full basis, p in {2,3})", s.pass,
              s.pass ? "coassociativity, coproduct homomorphism, antipode axioms, "
                       "and antipode closed forms all hold"
                     : "a Hopf-structure check fails",
              s.failures);
  }

  // 4. Defining ideal: symmetrizer kills the relation generators; the
  //    rewriting identities and nilpotency hold.
  {
    Sweep s;
    for (int p : {2, 3, 4, 5}) s.feed(p, serreCheck(p));
    criterion("A04 relation ideal (p in {2,3,4,5})", s.pass,
              s.pass ? "relation generators vanish under the symmetrizer; rewrite "
                       "identities and p-th-power nilpotency hold"
                     : "an ideal check fails",
              s.failures);
  }

  // 5. One-vertex module dimensions match the closed form on the label grid.
  {
    Sweep s;
    for (int p : {2, 3, 4}) s.feed(p, ydmodDimsCheck(p, 2 * p));
    criterion("A05 module dimensions (1 <= n1,n2 <= 2p, p in {2,3,4})", s.pass,
              s.pass ? "generated dimension equals the closed form on every label"
                     : "a generated dimension deviates from the closed form",
              s.failures);
  }

  // 6. Spin-2 self-OPE: central term, gap, 2T, dT.
  {
    Sweep s;
    for (int p = 2; p <= 6; ++p) s.feed(p, ttOPECheck(p));
    criterion("A06 spin-2 self-OPE and central charge (p in {2..6})", s.pass,
              s.pass ? "central coefficient and all pole channels match the closed forms"
                     : "a spin-2 OPE channel deviates",
              s.failures);
  }

  // 7. Spin-3 self-OPE: all five displayed coefficient combinations.
  {
    Sweep s;
    for (int p : {2, 3, 4}) s.feed(p, wwOPECheck(p));
    criterion("A07 spin-3 self-OPE coefficients (p in {2,3,4})", s.pass,
              s.pass ? "all five displayed pole coefficients match exactly"
                     : "a spin-3 OPE coefficient deviates",
              s.failures);
  }

  // 8. Both currents lie in the kernel of all four screenings.
  {
    Sweep s;
    for (int p : {2, 3}) {
      s.feed(p, shortScreeningKernel(p));
      s.feed(p, longScreeningCommutes(p));
    }
    criterion("A08 screening kernel (p in {2,3})", s.pass,
              s.pass ? "short and long screenings annihilate both currents"
                     : "a screening residue survives",
              s.failures);
  }

  // 9. Vertex-operator dimension row for the five marked momenta.
  {
    Sweep s;
    for (int p = 2; p <= 6; ++p) s.feed(p, vertexDimensionRowCheck(p));
    criterion("A09 vertex dimension row (p in {2..6})", s.pass,
              s.pass ? "(3, 3, 2p-1, 3p-2, 2p-1) reproduced"
                     : "a vertex dimension deviates",
              s.failures);
  }

  // 10. Singular-vector bookkeeping. The expected level multisets must be
  //     contained in the enumeration, and must form its minimal prefix.
  //     The enumeration rule provably admits one further genuine vector at
  //     level p-2 for the (-1,-1) module, below that module's expected pair
  //     {p-1,p-1}, so the minimal-prefix reading fails there; both readings
  //     are reported and the strict one decides.
  {
    bool contained = true, minimal = true, footnote = true;
    std::vector<std::string> details;
    for (int p : {3, 4, 5}) {
      struct Case {
        const char* label;
        HwParams h;
        std::vector<long> expect;
      };
      const std::vector<Case> cases = {
          {"unit", HwParams{p - 1, p - 1}, {1, 1, 4, 2L * p - 1, 2L * p - 1}},
          {"first-long-vertex", HwParams{3 * p - 1, -1}, {3, p - 1}},
          {"inverse-long-vertex", HwParams{2 * p - 1, -p - 1}, {2, 2, 2L * p - 2, 2L * p - 2}},
          {"double-inverse-vertex", HwParams{-1, -1}, {p - 1L, p - 1L}},
          {"seed-field", HwParams{2 * p - 1, 2 * p - 1}, {2, 2}},
      };
      for (const auto& cs : cases) {
        auto svs = singularVectorLevels(p, cs.h, 2 * p + 2);
        std::vector<long> got;
        for (const auto& sv : svs) got.push_back(sv.level);
        std::sort(got.begin(), got.end());
        std::vector<long> expect = cs.expect;
        std::sort(expect.begin(), expect.end());

        bool cont = std::includes(got.begin(), got.end(), expect.begin(), expect.end());
        std::vector<long> prefix = got;
        if (prefix.size() > expect.size()) prefix.resize(expect.size());
        bool min = prefix == expect;
        if (!cont) contained = false;
        if (!min) {
          minimal = false;
          details.push_back("p=" + std::to_string(p) + " " + cs.label + ": expected minimal levels " +
                            levelsStr(expect) + ", reported " + levelsStr(got) +
                            (cont ? " (expected set contained, but not the minimal prefix)"
                                  : " (expected set missing)"));
        }
      }
      // Footnote check: the level-(2p-2) vector of the inverse-long-vertex
      // module carries parameters on the orbit of (-1, 3p-1).
      auto svs = singularVectorLevels(p, HwParams{2 * p - 1, -p - 1}, 2 * p + 2);
      HwParams want = weylOrbitCanonical(HwParams{-1, 3 * p - 1});
      bool seen = false;
      for (const auto& sv : svs)
        if (sv.level == 2 * p - 2 && sv.canonical == want) seen = true;
      if (!seen) {
        footnote = false;
        details.push_back("p=" + std::to_string(p) +
                          ": level-(2p-2) parameter check failed for the inverse-long-vertex module");
      }
    }
    details.insert(details.begin(),
                   std::string("containment sub-check: ") + (contained ? "pass" : "FAIL") +
                       "; minimal-prefix sub-check: " + (minimal ? "pass" : "FAIL") +
                       "; parameter sub-check: " + (footnote ? "pass" : "FAIL"));
    bool pass = contained && minimal && footnote;
    criterion("A10 singular-vector level bookkeeping (p in {3,4,5})", pass,
              pass ? "expected level sets are the minimal reported levels, with the "
                     "level-(2p-2) parameter identification"
                   : "expected level sets are contained but one module's set is not the "
                     "minimal prefix of the enumeration",
              details);
  }

  // 11. Octuplet chain at p=2, repeated at p=3.
  {
    Sweep s;
    Rational r2(0), r3(0);
    {
      OctupletResult res = octupletChain(2);
      s.feed(2, res.checks);
      r2 = res.closureRatio;
    }
    {
      OctupletResult res = octupletChain(3);
      s.feed(3, res.checks);
      r3 = res.closureRatio;
    }
    bool pass = s.pass && r2 != 0 && r3 != 0;
    criterion("A11 octuplet chain (p=2 and p=3)", pass,
              pass ? "all eight members are nonzero spin-(3p-2) primaries in the "
                     "screening kernel; zero arrows vanish; endpoint routes agree "
                     "(ratios " + ratStr(r2) + " and " + ratStr(r3) + ")"
                   : "an octuplet chain check fails",
              s.failures);
  }

  // 12. Octuplet OPE structure at p=2.
  {
    Sweep s;
    s.feed(2, octupletOPEStructure(2));
    criterion("A12 octuplet OPE structure (p=2)", s.pass,
              s.pass ? "identity/spin-2/derivative channels, parity sign pattern, "
                       "fusion channels, and regular pairs all verified"
                     : "an octuplet OPE channel deviates",
              s.failures);
  }

  // 13. Label dimension formula equals the highest-weight eigenvalue.
  {
    Sweep s;
    for (int p = 2; p <= 5; ++p) s.feed(p, stateFieldCheck(p, 2 * p));
    criterion("A13 state-field dimension identity (1 <= n1,n2 <= 2p, p in {2..5})", s.pass,
              s.pass ? "label formula = vertex dimension = highest-weight eigenvalue"
                     : "a state-field dimension identity fails",
              s.failures);
  }

  std::cout << (g_allPass ? "ACCEPTANCE: all criteria passed\n"
                          : "ACCEPTANCE: criterion failures present (see lines above)\n");
  return g_allPass ? 0 : 1;
}
