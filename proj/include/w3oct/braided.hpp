#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "w3oct/cyclotomic.hpp"

namespace w3oct {

// A word in the free tensor algebra on the two-letter braided vector space,
// letters 1 (-> F1) and 2 (-> F2). The empty word is the unit.
using Word = std::vector<unsigned char>;

// Graded lexicographic order: canonical for serialization.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Element of the tensor algebra: finite map word -> coefficient, canonical
// (no zero terms).
class TensorElem {
 public:
  TensorElem() = default;
  explicit TensorElem(int p) : p_(p) {}

  static TensorElem zero(int p) { return TensorElem(p); }
  static TensorElem unit(int p);
  static TensorElem ofWord(int p, Word w);
  static TensorElem ofWord(int p, Word w, const CycNum& coeff);

  int p() const { return p_; }
  const std::map<Word, CycNum, WordLess>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  void add(const Word& w, const CycNum& coeff);

  TensorElem operator-() const;
  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  TensorElem scaled(const CycNum& s) const;
  bool operator==(const TensorElem& o) const;

  // True iff all words have the same length; writes it when asked.
  bool homogeneousLength(int* length = nullptr) const;
  // True iff all words have the same bidegree (#1s, #2s); writes it when asked.
  bool homogeneousBidegree(int* count1 = nullptr, int* count2 = nullptr) const;

  std::string str() const;

 private:
  int p_ = 0;
  std::map<Word, CycNum, WordLess> terms_;
};

// Exponent e(i,j) with q_{ij} = q^{e(i,j)}: e = 2 on the diagonal, -1 off it.
int braidingExponent(int i, int j);
// q_{ij} as a field element.
CycNum braidingCoefficient(int p, int i, int j);

// Concatenation product (the free multiplication of the tensor algebra).
TensorElem concatProduct(const TensorElem& a, const TensorElem& b);

// Braided quantum shuffle product: sum over (m,n)-shuffles, a crossing factor
// q_{ab} whenever a letter b of the right operand passes a letter a of the
// left operand.
TensorElem shuffleProduct(const TensorElem& a, const TensorElem& b);

// Total braided symmetrizer S_n, via the recursion S_n = sh_{1,n-1} o
// (id (x) S_{n-1}). Input must be homogeneous of one word length n <=
// maxGrade; throws std::invalid_argument otherwise.
TensorElem braidedSymmetrizer(const TensorElem& x, int maxGrade = 8);

// Element of T(X) (x) T(X), used for the deconcatenation coproduct.
class Tensor2Elem {
 public:
  Tensor2Elem() = default;
  explicit Tensor2Elem(int p) : p_(p) {}

  int p() const { return p_; }
  using Key = std::pair<Word, Word>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      WordLess wl;
      if (wl(a.first, b.first)) return true;
      if (wl(b.first, a.first)) return false;
      return wl(a.second, b.second);
    }
  };
  const std::map<Key, CycNum, KeyLess>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  void add(const Word& l, const Word& r, const CycNum& coeff);
  Tensor2Elem& operator+=(const Tensor2Elem& o);
  Tensor2Elem& operator-=(const Tensor2Elem& o);
  bool operator==(const Tensor2Elem& o) const;

 private:
  int p_ = 0;
  std::map<Key, CycNum, KeyLess> terms_;
};

// Deconcatenation coproduct: every word splits into all prefix/suffix pairs
// with coefficient 1, extended linearly.
Tensor2Elem deconcat(const TensorElem& x);

// Diagonal braiding factor between bidegree-homogeneous elements:
// q11^{m1 n1} q12^{m1 n2} q21^{m2 n1} q22^{m2 n2} for bidegrees (m1,m2) and
// (n1,n2). Throws std::invalid_argument on inhomogeneous input.
CycNum braidingBetween(const TensorElem& x, const TensorElem& y);
CycNum braidingBetweenBidegrees(int p, int m1, int m2, int n1, int n2);

}  // namespace w3oct
