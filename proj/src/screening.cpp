#include "w3oct/screening.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace w3oct {

namespace {

std::string momStr(const Momentum& m) {
  return "(" + ratStr(m.c1) + "," + ratStr(m.c2) + ")";
}

Momentum scaledMom(const Momentum& m, const Rational& s) {
  return Momentum{m.c1 * s, m.c2 * s};
}

}  // namespace

Momentum shortMomentum(int p, int i) {
  if (p < 2) throw std::invalid_argument("shortMomentum: p must be >= 2");
  if (i == 1) return Momentum{1, 0};
  if (i == 2) return Momentum{0, 1};
  throw std::invalid_argument("shortMomentum: index must be 1 or 2");
}

Momentum longMomentum(int p, int i) {
  if (p < 2) throw std::invalid_argument("longMomentum: p must be >= 2");
  if (i == 1) return Momentum{-p, 0};
  if (i == 2) return Momentum{0, -p};
  throw std::invalid_argument("longMomentum: index must be 1 or 2");
}

FieldExpr screeningResidue(int p, const Momentum& alpha, const FieldExpr& A) {
  for (const auto& [key, coeff] : A.terms()) {
    Rational x = momentumPairing(p, alpha, key.mom);
    if (!ratIsInteger(x))
      throw std::domain_error("screening residue undefined: exponent alpha.mu = " + ratStr(x) +
                              " is not an integer for the term with momentum " + momStr(key.mom));
  }
  auto o = wickOPE(FieldExpr::exponential(p, alpha), A, -1);
  auto it = o.find(Rational(-1));
  return it == o.end() ? FieldExpr::zero(p) : it->second;
}

namespace {

std::vector<Check> residueKernelChecks(int p, const char* kind,
                                       Momentum (*mom)(int, int)) {
  std::vector<Check> out;
  FieldExpr T = buildT(p);
  FieldExpr W = buildW(p);
  for (int j = 1; j <= 2; ++j) {
    for (const auto& [fname, field] : {std::pair<const char*, const FieldExpr*>{"T", &T},
                                       {"W", &W}}) {
      FieldExpr r = screeningResidue(p, mom(p, j), *field);
      Check c;
      c.name = std::string(kind) + "-screening-" + std::to_string(j) + "-annihilates-" + fname;
      c.pass = r.isZero();
      c.detail = c.pass ? "residue vanishes"
                        : "nonzero residue with " + std::to_string(r.terms().size()) + " terms";
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

std::vector<Check> longScreeningCommutes(int p) {
  return residueKernelChecks(p, "long", &longMomentum);
}

std::vector<Check> shortScreeningKernel(int p) {
  return residueKernelChecks(p, "short", &shortMomentum);
}

Rational hwL0(int p, const HwParams& h) {
  return (h.m * h.m + h.n * h.n + h.m * h.n) / (3 * p) -
         Rational((p - 1) * (p - 1), p);
}

Rational hwW0(int p, const HwParams& h) {
  return (h.m - h.n) * (2 * h.m + h.n) * (h.m + 2 * h.n) / (2 * p * p * p);
}

HwParams xyFromMomentum(int p, const Momentum& c) {
  return HwParams{p - 1 + 2 * c.c1 - c.c2, p - 1 + 2 * c.c2 - c.c1};
}

std::vector<HwParams> weylOrbit(const HwParams& h) {
  const Rational &x = h.m, &y = h.n;
  std::set<HwParams> s{HwParams{x, y},       HwParams{-x, x + y}, HwParams{x + y, -y},
                       HwParams{y, -x - y},  HwParams{-x - y, x}, HwParams{-y, -x}};
  return std::vector<HwParams>(s.begin(), s.end());
}

HwParams weylOrbitCanonical(const HwParams& h) {
  std::vector<HwParams> o = weylOrbit(h);
  return o.front();
}

std::vector<SingularVector> singularVectorLevels(int p, const HwParams& h, long maxLevel) {
  if (maxLevel < 1) throw std::invalid_argument("singularVectorLevels: maxLevel must be >= 1");
  // Keyed by (level, canonical orbit of the new parameters); the stored
  // representative is the lexicographically least raw parameter pair found.
  std::map<std::pair<long, HwParams>, HwParams> found;
  auto record = [&](const Rational& level, const HwParams& params) {
    if (!ratIsInteger(level)) return;
    long lv = ratToLong(level);
    auto key = std::make_pair(lv, weylOrbitCanonical(params));
    auto [it, inserted] = found.try_emplace(key, params);
    if (!inserted && params < it->second) it->second = params;
  };
  std::vector<HwParams> orbit = weylOrbit(h);
  for (const auto& rep : orbit) {
    // First slot: m = a*p - c with integer a; singular vector at level a*c
    // with new parameters (m - 2ap, n + ap).
    if (ratIsInteger(rep.m)) {
      long mm = ratToLong(rep.m);
      long amax = maxLevel + std::labs(mm) / p + 2;
      for (long a = -amax; a <= amax; ++a) {
        if (a == 0) continue;
        long c = a * p - mm;
        if (a * c > 0 && a * c <= maxLevel)
          record(Rational(a * c), HwParams{rep.m - 2 * a * p, rep.n + a * p});
      }
    }
    // Second slot: n = b*p - d; level b*d; new parameters (m + bp, n - 2bp).
    if (ratIsInteger(rep.n)) {
      long nn = ratToLong(rep.n);
      long bmax = maxLevel + std::labs(nn) / p + 2;
      for (long b = -bmax; b <= bmax; ++b) {
        if (b == 0) continue;
        long d = b * p - nn;
        if (b * d > 0 && b * d <= maxLevel)
          record(Rational(b * d), HwParams{rep.m + b * p, rep.n - 2 * b * p});
      }
    }
  }
  // The map is keyed by (level, canonical), so iteration order is already
  // deterministic and sorted the way reports list entries.
  std::vector<SingularVector> out;
  out.reserve(found.size());
  for (const auto& [key, params] : found)
    out.push_back(SingularVector{key.first, params, key.second});
  return out;
}

std::pair<Momentum, Momentum> fundamentalWeights(int p) {
  Momentum w1{Rational(2 * p, 3), Rational(p, 3)};
  Momentum w2{Rational(p, 3), Rational(2 * p, 3)};
  for (int i = 1; i <= 2; ++i) {
    const Momentum& wi = i == 1 ? w1 : w2;
    for (int j = 1; j <= 2; ++j) {
      Rational want = i == j ? 1 : 0;
      if (momentumPairing(p, wi, shortMomentum(p, j)) != want)
        throw std::logic_error("fundamentalWeights: duality pairing violated");
    }
  }
  return {w1, w2};
}

StateField stateField(int p, int n1, int n2) {
  auto [w1, w2] = fundamentalWeights(p);
  Momentum mu = scaledMom(w1, Rational(1 - n1, p)) + scaledMom(w2, Rational(1 - n2, p));
  StateField out;
  out.mom = mu;
  out.delta = dimensionOfVertex(p, mu);
  out.hw = HwParams{p - n1, p - n2};
  return out;
}

}  // namespace w3oct
