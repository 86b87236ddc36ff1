#include "w3oct/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace w3oct {

namespace {

// Dense integer polynomials, lowest degree first.
using IPoly = std::vector<Int>;

IPoly ipolyMul(const IPoly& a, const IPoly& b) {
  IPoly out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division of integer polynomials (denominator monic up to sign is not
// assumed; divisions encountered here are exact by construction).
IPoly ipolyDivExact(IPoly num, const IPoly& den) {
  if (den.empty() || den.back() == 0) throw std::logic_error("ipolyDivExact: bad denominator");
  if (num.size() < den.size()) throw std::logic_error("ipolyDivExact: degree underflow");
  IPoly out(num.size() - den.size() + 1, Int(0));
  for (size_t k = out.size(); k-- > 0;) {
    Int q = num[k + den.size() - 1] / den.back();
    if (q * den.back() != num[k + den.size() - 1])
      throw std::logic_error("ipolyDivExact: inexact leading division");
    out[k] = q;
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= q * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("ipolyDivExact: nonzero remainder");
  return out;
}

// n-th cyclotomic polynomial by dividing x^n - 1 by the product of all lower
// cyclotomic polynomials of divisors of n.
IPoly cyclotomicPoly(int n, std::map<int, IPoly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IPoly num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  IPoly den{Int(1)};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) den = ipolyMul(den, cyclotomicPoly(d, cache));
  IPoly phi = ipolyDivExact(std::move(num), den);
  cache.emplace(n, phi);
  return phi;
}

// Dense rational polynomials, lowest degree first, trailing zeros trimmed.
using RPoly = std::vector<Rational>;

void rtrim(RPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// (quotient, remainder) of rational polynomial division.
std::pair<RPoly, RPoly> rdivmod(RPoly num, const RPoly& den) {
  RPoly quo;
  if (num.size() >= den.size()) quo.assign(num.size() - den.size() + 1, Rational(0));
  while (num.size() >= den.size()) {
    Rational q = num.back() / den.back();
    size_t shift = num.size() - den.size();
    quo[shift] = q;
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= q * den[j];
    rtrim(num);  // the leading term cancels exactly
  }
  return {std::move(quo), std::move(num)};
}

RPoly rsub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rtrim(a);
  return a;
}

RPoly rmul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

CycField::CycField(int p_) : p(p_) {
  std::map<int, IPoly> cache;
  phi = cyclotomicPoly(2 * p, cache);
  deg = static_cast<int>(phi.size()) - 1;
  zetaPow.resize(2 * p);
  for (int k = 0; k < 2 * p; ++k) {
    std::vector<Rational> xk(k + 1, Rational(0));
    xk[k] = 1;
    zetaPow[k] = reduce(std::move(xk));
  }
}

const CycField& CycField::get(int p) {
  if (p < 2) throw std::domain_error("CycField: model parameter p must be >= 2");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) slot.reset(new CycField(p));
  return *slot;
}

std::vector<Rational> CycField::reduce(std::vector<Rational> a) const {
  for (size_t i = a.size(); i-- > static_cast<size_t>(deg);) {
    Rational coef = a[i];
    if (coef == 0) continue;
    // x^i = -sum_{j<deg} phi_j x^{i-deg+j} since phi is monic.
    for (int j = 0; j < deg; ++j) a[i - deg + j] -= coef * Rational(phi[j]);
    a[i] = 0;
  }
  a.resize(deg, Rational(0));
  return a;
}

CycNum::CycNum(int p, std::vector<Rational> coeffs) : p_(p) {
  c_ = CycField::get(p).reduce(std::move(coeffs));
}

CycNum CycNum::zero(int p) {
  CycNum x;
  x.p_ = p;
  x.c_.assign(CycField::get(p).deg, Rational(0));
  return x;
}

CycNum CycNum::one(int p) { return ofRational(p, Rational(1)); }

CycNum CycNum::ofRational(int p, const Rational& v) {
  CycNum x = zero(p);
  x.c_[0] = v;
  return x;
}

bool CycNum::isZero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycNum::isRational(Rational* value) const {
  if (p_ == 0) throw std::logic_error("CycNum: detached value");
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  if (value) *value = c_[0];
  return true;
}

namespace {
void requireSame(int a, int b) {
  if (a != b) throw std::invalid_argument("CycNum: mixed model parameters");
}
}  // namespace

CycNum CycNum::operator-() const {
  CycNum x = *this;
  for (auto& c : x.c_) c = -c;
  return x;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  requireSame(p_, o.p_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  requireSame(p_, o.p_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  requireSame(p_, o.p_);
  const CycField& F = CycField::get(p_);
  std::vector<Rational> conv(2 * F.deg - 1, Rational(0));
  for (int i = 0; i < F.deg; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < F.deg; ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = F.reduce(std::move(conv));
  return *this;
}

CycNum CycNum::inverse() const {
  if (isZero()) throw std::domain_error("CycNum: inverse of zero");
  const CycField& F = CycField::get(p_);
  // Extended Euclid over Q[x]: the cyclotomic polynomial is irreducible, so
  // gcd(a, phi) is a nonzero constant c with u*a + v*phi = c.
  RPoly r0(F.phi.begin(), F.phi.end());
  RPoly r1 = c_;
  rtrim(r1);
  RPoly s0{}, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, rem] = rdivmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    RPoly snew = rsub(s0, rmul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  if (r1.empty()) throw std::logic_error("CycNum: reducible modulus");
  Rational inv = Rational(1) / r1[0];
  for (auto& c : s1) c *= inv;
  return CycNum(p_, std::move(s1));
}

bool CycNum::operator==(const CycNum& o) const {
  requireSame(p_, o.p_);
  return c_ == o.c_;
}

std::string CycNum::str() const {
  if (p_ == 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational a = c_[k];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool unitCoeff = (a == 1) && k > 0;
    if (!unitCoeff) os << a;
    if (k > 0) {
      if (!unitCoeff) os << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) return "0";
  return os.str();
}

CycNum qPower(int p, long k) {
  const CycField& F = CycField::get(p);
  long m = k % (2 * p);
  if (m < 0) m += 2 * p;
  return CycNum(p, F.zetaPow[m]);
}

CycNum qInt(int p, long n) {
  if (n < 0) throw std::domain_error("qInt: negative argument");
  const CycField& F = CycField::get(p);
  std::vector<Rational> acc(F.deg, Rational(0));
  for (long j = 0; j < n; ++j) {
    long e = (2 * j) % (2 * p);
    const auto& z = F.zetaPow[e];
    for (int i = 0; i < F.deg; ++i) acc[i] += z[i];
  }
  return CycNum(p, std::move(acc));
}

namespace {
std::mutex qCacheMutex;
}  // namespace

CycNum qFac(int p, long n) {
  if (n < 0) throw std::domain_error("qFac: negative argument");
  static std::map<int, std::vector<CycNum>> cache;
  std::lock_guard<std::mutex> lock(qCacheMutex);
  auto& row = cache[p];
  if (row.empty()) row.push_back(CycNum::one(p));
  while (static_cast<long>(row.size()) <= n)
    row.push_back(row.back() * qInt(p, static_cast<long>(row.size())));
  return row[n];
}

namespace {
// Gaussian binomial rows in base q^2, built by the Pascal recursion
// [n,k] = [n-1,k-1] + q^{2k} [n-1,k].
const CycNum& gaussRow(int p, long n, long k) {
  static std::map<int, std::vector<std::vector<CycNum>>> cache;
  auto& rows = cache[p];
  while (static_cast<long>(rows.size()) <= n) {
    long m = static_cast<long>(rows.size());
    std::vector<CycNum> row(m + 1, CycNum::zero(p));
    row[0] = CycNum::one(p);
    row[m] = CycNum::one(p);
    for (long j = 1; j < m; ++j) row[j] = rows[m - 1][j - 1] + qPower(p, 2 * j) * rows[m - 1][j];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}
}  // namespace

CycNum qBinom(int p, long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("qBinom: need 0 <= k <= n");
  std::lock_guard<std::mutex> lock(qCacheMutex);
  return gaussRow(p, n, k);
}

CycNum qBinomOrZero(int p, long n, long k) {
  if (n < 0 || k < 0 || k > n) return CycNum::zero(p);
  std::lock_guard<std::mutex> lock(qCacheMutex);
  return gaussRow(p, n, k);
}

}  // namespace w3oct
