#include "w3oct/braided.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace w3oct {

TensorElem TensorElem::unit(int p) { return ofWord(p, Word{}); }

TensorElem TensorElem::ofWord(int p, Word w) { return ofWord(p, std::move(w), CycNum::one(p)); }

TensorElem TensorElem::ofWord(int p, Word w, const CycNum& coeff) {
  TensorElem x(p);
  x.add(w, coeff);
  return x;
}

void TensorElem::add(const Word& w, const CycNum& coeff) {
  if (coeff.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.isZero()) terms_.erase(it);
  }
}

TensorElem TensorElem::operator-() const {
  TensorElem x(p_);
  for (const auto& [w, c] : terms_) x.terms_.emplace(w, -c);
  return x;
}

namespace {
void requireSame(int a, int b) {
  if (a != b) throw std::invalid_argument("TensorElem: mixed model parameters");
}
}  // namespace

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  requireSame(p_, o.p_);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  requireSame(p_, o.p_);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

TensorElem TensorElem::scaled(const CycNum& s) const {
  TensorElem x(p_);
  for (const auto& [w, c] : terms_) x.add(w, c * s);
  return x;
}

bool TensorElem::operator==(const TensorElem& o) const {
  requireSame(p_, o.p_);
  return terms_ == o.terms_;
}

bool TensorElem::homogeneousLength(int* length) const {
  if (terms_.empty()) {
    if (length) *length = 0;
    return true;
  }
  size_t len = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_)
    if (w.size() != len) return false;
  if (length) *length = static_cast<int>(len);
  return true;
}

bool TensorElem::homogeneousBidegree(int* count1, int* count2) const {
  bool first = true;
  int m1 = 0, m2 = 0;
  for (const auto& [w, c] : terms_) {
    int a = 0, b = 0;
    for (auto l : w) (l == 1 ? a : b)++;
    if (first) {
      m1 = a;
      m2 = b;
      first = false;
    } else if (a != m1 || b != m2) {
      return false;
    }
  }
  if (count1) *count1 = m1;
  if (count2) *count2 = m2;
  return true;
}

std::string TensorElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*";
    if (w.empty()) {
      os << "1";
    } else {
      for (auto l : w) os << "F" << static_cast<int>(l);
    }
  }
  return os.str();
}

int braidingExponent(int i, int j) {
  if ((i != 1 && i != 2) || (j != 1 && j != 2))
    throw std::invalid_argument("braidingExponent: letters must be 1 or 2");
  return i == j ? 2 : -1;
}

CycNum braidingCoefficient(int p, int i, int j) { return qPower(p, braidingExponent(i, j)); }

TensorElem concatProduct(const TensorElem& a, const TensorElem& b) {
  requireSame(a.p(), b.p());
  TensorElem out(a.p());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, cu * cv);
    }
  return out;
}

namespace {

// All (|u|,|v|)-shuffles of a single word pair. A letter v[j] placed before
// the remaining letters u[i..] crosses each of them, accumulating the
// integer braiding exponent; one q-power lookup per completed shuffle.
void shuffleWords(int p, const Word& u, const Word& v, const CycNum& coeff, TensorElem& out) {
  size_t m = u.size(), n = v.size();
  // suffix exponent sums: sufE[i][l-1] = sum_{k>=i} e(u[k], l)
  std::vector<std::array<long, 2>> sufE(m + 1, {0, 0});
  for (size_t i = m; i-- > 0;) {
    sufE[i][0] = sufE[i + 1][0] + braidingExponent(u[i], 1);
    sufE[i][1] = sufE[i + 1][1] + braidingExponent(u[i], 2);
  }
  Word buf(m + n);
  // iterative over all interleavings via recursion
  struct Rec {
    int p;
    const Word &u, &v;
    const std::vector<std::array<long, 2>>& sufE;
    const CycNum& coeff;
    TensorElem& out;
    Word& buf;
    void go(size_t i, size_t j, long E) {
      if (i == u.size() && j == v.size()) {
        out.add(buf, coeff * qPower(p, E));
        return;
      }
      if (i < u.size()) {
        buf[i + j] = u[i];
        go(i + 1, j, E);
      }
      if (j < v.size()) {
        buf[i + j] = v[j];
        go(i, j + 1, E + sufE[i][v[j] - 1]);
      }
    }
  } rec{p, u, v, sufE, coeff, out, buf};
  rec.go(0, 0, 0);
}

}  // namespace

TensorElem shuffleProduct(const TensorElem& a, const TensorElem& b) {
  requireSame(a.p(), b.p());
  TensorElem out(a.p());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) shuffleWords(a.p(), u, v, cu * cv, out);
  return out;
}

namespace {

// Insert one letter (as the left shuffle operand) into every position of a
// word; placing it after k letters crosses those k letters.
TensorElem shuffleSingleLeft(int p, unsigned char letter, const TensorElem& rest) {
  TensorElem out(p);
  for (const auto& [w, c] : rest.terms()) {
    long E = 0;
    for (size_t k = 0; k <= w.size(); ++k) {
      Word nw;
      nw.reserve(w.size() + 1);
      nw.insert(nw.end(), w.begin(), w.begin() + k);
      nw.push_back(letter);
      nw.insert(nw.end(), w.begin() + k, w.end());
      out.add(nw, c * qPower(p, E));
      if (k < w.size()) E += braidingExponent(letter, w[k]);
    }
  }
  return out;
}

const TensorElem& symmWord(int p, const Word& w, std::map<Word, TensorElem, WordLess>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  TensorElem result;
  if (w.size() <= 1) {
    result = TensorElem::ofWord(p, w);
  } else {
    Word tail(w.begin() + 1, w.end());
    result = shuffleSingleLeft(p, w[0], symmWord(p, tail, memo));
  }
  return memo.emplace(w, std::move(result)).first->second;
}

}  // namespace

TensorElem braidedSymmetrizer(const TensorElem& x, int maxGrade) {
  int n = 0;
  if (!x.homogeneousLength(&n))
    throw std::invalid_argument("braidedSymmetrizer: inhomogeneous input");
  if (n > maxGrade) throw std::invalid_argument("braidedSymmetrizer: grade over bound");
  std::map<Word, TensorElem, WordLess> memo;
  TensorElem out(x.p());
  for (const auto& [w, c] : x.terms()) out += symmWord(x.p(), w, memo).scaled(c);
  return out;
}

void Tensor2Elem::add(const Word& l, const Word& r, const CycNum& coeff) {
  if (coeff.isZero()) return;
  Key k{l, r};
  auto [it, inserted] = terms_.try_emplace(std::move(k), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.isZero()) terms_.erase(it);
  }
}

Tensor2Elem& Tensor2Elem::operator+=(const Tensor2Elem& o) {
  requireSame(p_, o.p_);
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

Tensor2Elem& Tensor2Elem::operator-=(const Tensor2Elem& o) {
  requireSame(p_, o.p_);
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

bool Tensor2Elem::operator==(const Tensor2Elem& o) const {
  requireSame(p_, o.p_);
  return terms_ == o.terms_;
}

Tensor2Elem deconcat(const TensorElem& x) {
  Tensor2Elem out(x.p());
  for (const auto& [w, c] : x.terms()) {
    for (size_t k = 0; k <= w.size(); ++k) {
      Word l(w.begin(), w.begin() + k);
      Word r(w.begin() + k, w.end());
      out.add(l, r, c);
    }
  }
  return out;
}

CycNum braidingBetweenBidegrees(int p, int m1, int m2, int n1, int n2) {
  long e = 2L * m1 * n1 + 2L * m2 * n2 - 1L * m1 * n2 - 1L * m2 * n1;
  return qPower(p, e);
}

CycNum braidingBetween(const TensorElem& x, const TensorElem& y) {
  int m1 = 0, m2 = 0, n1 = 0, n2 = 0;
  if (!x.homogeneousBidegree(&m1, &m2) || !y.homogeneousBidegree(&n1, &n2))
    throw std::invalid_argument("braidingBetween: inhomogeneous input");
  return braidingBetweenBidegrees(x.p(), m1, m2, n1, n2);
}

}  // namespace w3oct
