#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace w3oct {

// Exact arithmetic backend. All kernel math is exact; no floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string ratStr(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline bool ratIsInteger(const Rational& x) { return denominator(x) == 1; }

// Floor of a non-negative rational (used for truncation budgets).
inline long ratFloorNonNeg(const Rational& x) {
  if (x < 0) throw std::invalid_argument("ratFloorNonNeg: negative input");
  Int q = numerator(x) / denominator(x);
  return static_cast<long>(q);
}

inline long ratToLong(const Rational& x) {
  if (!ratIsInteger(x)) throw std::domain_error("ratToLong: not an integer: " + ratStr(x));
  return static_cast<long>(numerator(x));
}

inline Rational factorialRat(long n) {
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

}  // namespace w3oct
