#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "w3oct/checks.hpp"
#include "w3oct/freefield.hpp"

namespace w3oct {

// Short screening momenta alpha_1 = (1,0), alpha_2 = (0,1); long screening
// momenta -p*alpha_1 = (-p,0), -p*alpha_2 = (0,-p).
Momentum shortMomentum(int p, int i);
Momentum longMomentum(int p, int i);

// Residue of e^{alpha.phi(z)} A(w): the coefficient of (z-w)^{-1}. Requires
// alpha.mu integral for every exponential momentum mu in A; otherwise throws
// std::domain_error naming the offending term (branch cut).
FieldExpr screeningResidue(int p, const Momentum& alpha, const FieldExpr& A);

// Zero residues of the two long screenings on T and W.
std::vector<Check> longScreeningCommutes(int p);
// Zero residues of the two short screenings on T and W.
std::vector<Check> shortScreeningKernel(int p);

// Highest-weight parameters (x,y) = (m/sqrt(p), n/sqrt(p)); stored as the
// rational pair (m,n).
struct HwParams {
  Rational m = 0, n = 0;
  std::strong_ordering operator<=>(const HwParams&) const = default;
  bool operator==(const HwParams&) const = default;
};

// Eigenvalues on the highest-weight state.
Rational hwL0(int p, const HwParams& h);
Rational hwW0(int p, const HwParams& h);

// The affine map from vertex momentum to highest-weight parameters:
// m = p - 1 + 2c1 - c2, n = p - 1 + 2c2 - c1. Satisfies
// hwL0(xyFromMomentum(c)) = dimensionOfVertex(c) identically.
HwParams xyFromMomentum(int p, const Momentum& c);

// The (<= 6)-element Weyl orbit, sorted and deduplicated.
std::vector<HwParams> weylOrbit(const HwParams& h);
// Lexicographically least orbit element (canonical representative).
HwParams weylOrbitCanonical(const HwParams& h);

struct SingularVector {
  long level = 0;
  HwParams params;     // highest-weight parameters of the singular vector
  HwParams canonical;  // canonical orbit representative of params
  std::strong_ordering operator<=>(const SingularVector&) const = default;
  bool operator==(const SingularVector&) const = default;
};

// Enumerate singular-vector levels by the integer-slot rules applied to
// every Weyl-orbit representative with integer parameters, deduplicated by
// (level, canonical orbit of the target parameters), up to maxLevel.
std::vector<SingularVector> singularVectorLevels(int p, const HwParams& h, long maxLevel);

// Fundamental weights omega_1 = (2p/3, p/3), omega_2 = (p/3, 2p/3), dual to
// the screening momenta under the pairing.
std::pair<Momentum, Momentum> fundamentalWeights(int p);

struct StateField {
  Momentum mom;
  Rational delta;
  HwParams hw;
};

// The vertex-operator data attached to the label (n1, n2):
// mu = ((1-n1)/p) omega_1 + ((1-n2)/p) omega_2, its dimension, and the
// highest-weight parameters (p-n1, p-n2).
StateField stateField(int p, int n1, int n2);

}  // namespace w3oct
