#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "w3oct/checks.hpp"
#include "w3oct/rational.hpp"

namespace w3oct {

// Exponential momentum mu = c1*alpha_1 + c2*alpha_2 in the screening basis.
struct Momentum {
  Rational c1 = 0, c2 = 0;
  // Concrete category: the rational type supplies only < and ==, so a
  // defaulted `auto` return cannot be synthesized.
  std::strong_ordering operator<=>(const Momentum&) const = default;
  bool operator==(const Momentum&) const = default;
  bool isZero() const { return c1 == 0 && c2 == 0; }
  Momentum operator+(const Momentum& o) const { return {c1 + o.c1, c2 + o.c2}; }
};

// mu . nu = (2 c1 d1 + 2 c2 d2 - c1 d2 - c2 d1)/p, from the boson pairing
// matrix G = [[2/p,-1/p],[-1/p,2/p]].
Rational momentumPairing(int p, const Momentum& mu, const Momentum& nu);

// One normal-ordered factor d^k phi_i, boson i in {1,2}, order k >= 1.
using Factor = std::pair<int, int>;

// Key of a normal-ordered monomial: sorted factor multiset times e^{mu.phi}.
struct TermKey {
  std::vector<Factor> factors;  // kept sorted
  Momentum mom;
  std::strong_ordering operator<=>(const TermKey&) const = default;
  bool operator==(const TermKey&) const = default;
};

// Exact-rational linear combination of normal-ordered monomials.
class FieldExpr {
 public:
  FieldExpr() = default;
  explicit FieldExpr(int p) : p_(p) {}

  static FieldExpr zero(int p) { return FieldExpr(p); }
  static FieldExpr unit(int p);                          // the identity field
  static FieldExpr exponential(int p, const Momentum& m);  // e^{m.phi}
  static FieldExpr bosonDeriv(int p, int boson, int order);  // d^k phi_i

  int p() const { return p_; }
  const std::map<TermKey, Rational>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  void add(TermKey key, const Rational& coeff);  // sorts factors, merges, prunes

  FieldExpr operator-() const;
  FieldExpr& operator+=(const FieldExpr& o);
  FieldExpr& operator-=(const FieldExpr& o);
  friend FieldExpr operator+(FieldExpr a, const FieldExpr& b) { return a += b; }
  friend FieldExpr operator-(FieldExpr a, const FieldExpr& b) { return a -= b; }
  FieldExpr scaled(const Rational& s) const;
  bool operator==(const FieldExpr& o) const;

  // d/dw, including the momentum term of the exponential.
  FieldExpr derivative() const;

  // True iff every term has total derivative degree `degree` and momentum
  // `mom` (the shape checks used on screening-chain outputs).
  bool isHomogeneous(int degree, const Momentum& mom) const;

  // If the whole expression is a rational multiple of `b` (nonzero), writes
  // the ratio and returns true.
  bool proportionalTo(const FieldExpr& b, Rational* ratio = nullptr) const;

  std::string str() const;

 private:
  int p_ = 0;
  std::map<TermKey, Rational> terms_;
};

// Merge product (symbolic normal-ordered juxtaposition, no contractions).
FieldExpr wickProduct(const FieldExpr& a, const FieldExpr& b);

// Full Wick OPE A(z)B(w): map from the (z-w)-exponent to its coefficient
// field, re-expanded at w; truncated to exponents <= cap.
std::map<Rational, FieldExpr> wickOPE(const FieldExpr& A, const FieldExpr& B, const Rational& cap);

// Contour normal product: the zeroth-order OPE coefficient. This is the
// composite-field convention under which the spin-3 self-OPE closes on the
// documented coefficient combinations (the plain merge product does not).
FieldExpr normalProduct(const FieldExpr& A, const FieldExpr& B);

// The spin-2 and spin-3 currents of the screening kernel.
FieldExpr buildT(int p);
FieldExpr buildW(int p);

// Central charge -2(3p-4)(4p-3)/p.
Rational centralCharge(int p);

// Virasoro dimension of the vertex operator e^{c.phi}.
Rational dimensionOfVertex(int p, const Momentum& c);

// Full verification of the T(z)T(w), T(z)W(w), and W(z)W(w) pole structure
// against the closed forms.
std::vector<Check> ttOPECheck(int p);
std::vector<Check> twOPECheck(int p);
std::vector<Check> wwOPECheck(int p);

}  // namespace w3oct
