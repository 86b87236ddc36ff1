#pragma once

#include <map>
#include <string>
#include <vector>

#include "w3oct/rational.hpp"

namespace w3oct {

// Precomputed data for the cyclotomic field Q(zeta_{2p}), with q = zeta_{2p}
// = e^{i*pi/p}, so q^p = -1 and q^{2p} = 1. Elements are dense rational
// coefficient vectors in the power basis 1, q, ..., q^{phi(2p)-1} modulo the
// 2p-th cyclotomic polynomial.
class CycField {
 public:
  // Cached per p; thread-safe. Throws std::domain_error for p < 2.
  static const CycField& get(int p);

  int p;
  int deg;                                     // phi(2p)
  std::vector<Int> phi;                        // monic Phi_{2p}, lowest degree first
  std::vector<std::vector<Rational>> zetaPow;  // q^k reduced, k = 0..2p-1

  // Reduce an arbitrary-length coefficient vector modulo phi; result has
  // length deg.
  std::vector<Rational> reduce(std::vector<Rational> a) const;

 private:
  explicit CycField(int p_);
};

class CycNum {
 public:
  CycNum() = default;  // detached zero; only safe as a container placeholder
  CycNum(int p, std::vector<Rational> coeffs);  // reduces the input

  static CycNum zero(int p);
  static CycNum one(int p);
  static CycNum ofRational(int p, const Rational& v);

  int p() const { return p_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool isZero() const;
  // True iff the element lies in Q; writes the value when asked.
  bool isRational(Rational* value = nullptr) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  CycNum inverse() const;  // throws std::domain_error on zero
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

  bool operator==(const CycNum& o) const;

  // Canonical human-readable form, e.g. "1 - 2/3*q^2".
  std::string str() const;

 private:
  int p_ = 0;
  std::vector<Rational> c_;
};

// q^k for any integer k.
CycNum qPower(int p, long k);
// <n> = 1 + q^2 + ... + q^{2(n-1)}; requires n >= 0.
CycNum qInt(int p, long n);
// <n>! = <1><2>...<n>; requires n >= 0.
CycNum qFac(int p, long n);
// Gaussian binomial in base q^2 via the Pascal recursion, so it is defined
// even when individual factorials vanish. Throws std::domain_error unless
// 0 <= k <= n.
CycNum qBinom(int p, long n, long k);
// Same, but returns 0 outside 0 <= k <= n (formula-evaluation convenience).
CycNum qBinomOrZero(int p, long n, long k);

}  // namespace w3oct
