#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "w3oct/braided.hpp"
#include "w3oct/checks.hpp"
#include "w3oct/cyclotomic.hpp"

namespace w3oct {

// PBW index [r,t,s] <-> F1^r F3^t F2^s, F3 = [F2,F1]_q = F2 F1 - q^{-1} F1 F2.
// Valid indices satisfy 0 <= r,t,s <= p-1; anything else denotes zero in the
// p^3-dimensional quotient.
struct PbwIndex {
  int r = 0, t = 0, s = 0;
  auto operator<=>(const PbwIndex&) const = default;
  int grade() const { return r + 2 * t + s; }
  bool valid(int p) const {
    return r >= 0 && t >= 0 && s >= 0 && r < p && t < p && s < p;
  }
};

std::string pbwStr(const PbwIndex& i);

class NicholsElem {
 public:
  NicholsElem() = default;
  explicit NicholsElem(int p) : p_(p) {}

  static NicholsElem zero(int p) { return NicholsElem(p); }
  static NicholsElem unit(int p);
  static NicholsElem basis(int p, const PbwIndex& i);
  static NicholsElem basis(int p, const PbwIndex& i, const CycNum& coeff);

  int p() const { return p_; }
  const std::map<PbwIndex, CycNum>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  // Inserts a term; the index must be valid for p (callers decide dropping).
  void add(const PbwIndex& i, const CycNum& coeff);

  NicholsElem operator-() const;
  NicholsElem& operator+=(const NicholsElem& o);
  NicholsElem& operator-=(const NicholsElem& o);
  friend NicholsElem operator+(NicholsElem a, const NicholsElem& b) { return a += b; }
  friend NicholsElem operator-(NicholsElem a, const NicholsElem& b) { return a -= b; }
  NicholsElem scaled(const CycNum& s) const;
  bool operator==(const NicholsElem& o) const;

  std::string str() const;

 private:
  int p_ = 0;
  std::map<PbwIndex, CycNum> terms_;
};

// Element of the braided tensor square B(X) (x) B(X) in the PBW basis.
class NicholsTensor2 {
 public:
  NicholsTensor2() = default;
  explicit NicholsTensor2(int p) : p_(p) {}

  int p() const { return p_; }
  using Key = std::pair<PbwIndex, PbwIndex>;
  const std::map<Key, CycNum>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  void add(const PbwIndex& l, const PbwIndex& r, const CycNum& coeff);
  NicholsTensor2& operator+=(const NicholsTensor2& o);
  NicholsTensor2& operator-=(const NicholsTensor2& o);
  bool operator==(const NicholsTensor2& o) const;

 private:
  int p_ = 0;
  std::map<Key, CycNum> terms_;
};

// Closed-form product in the PBW presentation (concatenation normalization);
// out-of-box target indices are dropped as zero in the quotient.
NicholsElem multiplyConcat(const NicholsElem& a, const NicholsElem& b);

// Closed-form product in the shuffle normalization; out-of-box targets
// vanish automatically through the q-binomial coefficients (asserted).
NicholsElem multiplyShuffle(const NicholsElem& a, const NicholsElem& b);

// Coproduct in the PBW basis (quadruple-sum closed form).
NicholsTensor2 coproduct(const NicholsElem& a);

// Counit: coefficient of [0,0,0].
CycNum counit(const NicholsElem& a);

// Antipode via the closed forms on the one-parameter families assembled with
// the braided-antiautomorphism factor q^{rt-rs+ts} and shuffle products.
NicholsElem antipode(const NicholsElem& a);

// Componentwise product on the braided tensor square for the shuffle
// normalization: (a (x) b)(c (x) d) = braiding(b,c) (a*c (x) b*d).
NicholsTensor2 multiplyTensor2(const NicholsTensor2& A, const NicholsTensor2& B);

// Bidegree of a PBW basis element: (#F1, #F2) = (r+t, s+t).
std::pair<int, int> pbwBidegree(const PbwIndex& i);

// Expansion into the tensor algebra: the symmetrizer image of
// F1^r F3^t F2^s divided by <r>! <t>! <s>! (1-q^2)^t. Cached per p.
TensorElem toTensor(const NicholsElem& x, int maxGrade = 8);

// Ideal and rewriting checks: the five defining generators vanish under the
// symmetrizer, the rewritten q-commutation rules hold in multiplyConcat, and
// the three PBW generators are nilpotent of order p.
std::vector<Check> serreCheck(int p);

}  // namespace w3oct
