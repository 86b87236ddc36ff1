#include "w3oct/nichols.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace w3oct {

namespace {

void requireSameP(int pa, int pb) {
  if (pa != pb) throw std::invalid_argument("nichols: mixed root orders");
}

// (1-q^2)^n
CycNum oneMinusQ2Pow(int p, int n) {
  CycNum base = CycNum::one(p) - qPower(p, 2);
  CycNum out = CycNum::one(p);
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

CycNum signPow(int n, CycNum c) { return (n % 2) ? -c : c; }

}  // namespace

std::string pbwStr(const PbwIndex& i) {
  std::ostringstream os;
  os << "[" << i.r << "," << i.t << "," << i.s << "]";
  return os.str();
}

NicholsElem NicholsElem::unit(int p) { return basis(p, PbwIndex{0, 0, 0}); }

NicholsElem NicholsElem::basis(int p, const PbwIndex& i) {
  return basis(p, i, CycNum::one(p));
}

NicholsElem NicholsElem::basis(int p, const PbwIndex& i, const CycNum& coeff) {
  NicholsElem x(p);
  x.add(i, coeff);
  return x;
}

void NicholsElem::add(const PbwIndex& i, const CycNum& coeff) {
  if (!i.valid(p_))
    throw std::invalid_argument("NicholsElem::add: index outside the basis box " + pbwStr(i));
  if (coeff.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(i, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.isZero()) terms_.erase(it);
  }
}

NicholsElem NicholsElem::operator-() const {
  NicholsElem out(p_);
  for (const auto& [i, c] : terms_) out.terms_.emplace(i, -c);
  return out;
}

NicholsElem& NicholsElem::operator+=(const NicholsElem& o) {
  requireSameP(p_, o.p_);
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

NicholsElem& NicholsElem::operator-=(const NicholsElem& o) {
  requireSameP(p_, o.p_);
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

NicholsElem NicholsElem::scaled(const CycNum& s) const {
  NicholsElem out(p_);
  if (s.isZero()) return out;
  for (const auto& [i, c] : terms_) {
    CycNum sc = c * s;
    if (!sc.isZero()) out.terms_.emplace(i, sc);
  }
  return out;
}

bool NicholsElem::operator==(const NicholsElem& o) const {
  return p_ == o.p_ && terms_ == o.terms_;
}

std::string NicholsElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")" << pbwStr(i);
  }
  return os.str();
}

void NicholsTensor2::add(const PbwIndex& l, const PbwIndex& r, const CycNum& coeff) {
  if (!l.valid(p_) || !r.valid(p_))
    throw std::invalid_argument("NicholsTensor2::add: index outside the basis box");
  if (coeff.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{l, r}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.isZero()) terms_.erase(it);
  }
}

NicholsTensor2& NicholsTensor2::operator+=(const NicholsTensor2& o) {
  requireSameP(p_, o.p_);
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

NicholsTensor2& NicholsTensor2::operator-=(const NicholsTensor2& o) {
  requireSameP(p_, o.p_);
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

bool NicholsTensor2::operator==(const NicholsTensor2& o) const {
  return p_ == o.p_ && terms_ == o.terms_;
}

NicholsElem multiplyConcat(const NicholsElem& a, const NicholsElem& b) {
  requireSameP(a.p(), b.p());
  int p = a.p();
  NicholsElem out(p);
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      int r1 = ia.r, t1 = ia.t, s1 = ia.s;
      int r2 = ib.r, t2 = ib.t, s2 = ib.s;
      int imax = std::min(s1, r2);
      for (int i = 0; i <= imax; ++i) {
        PbwIndex target{r1 + r2 - i, t1 + t2 + i, s1 + s2 - i};
        if (!target.valid(p)) continue;  // zero in the quotient
        long e = static_cast<long>(t1) * (r2 - i) + static_cast<long>(t2) * (s1 - i) -
                 static_cast<long>(s1) * r2 + static_cast<long>(i) * (i + 1) / 2;
        CycNum c =
            ca * cb * qPower(p, e) * qFac(p, i) * qBinom(p, s1, i) * qBinom(p, r2, i);
        out.add(target, c);
      }
    }
  return out;
}

NicholsElem multiplyShuffle(const NicholsElem& a, const NicholsElem& b) {
  requireSameP(a.p(), b.p());
  int p = a.p();
  NicholsElem out(p);
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      int r1 = ia.r, t1 = ia.t, s1 = ia.s;
      int r2 = ib.r, t2 = ib.t, s2 = ib.s;
      int imax = std::min(s1, r2);
      for (int i = 0; i <= imax; ++i) {
        PbwIndex target{r1 + r2 - i, t1 + t2 + i, s1 + s2 - i};
        long e = static_cast<long>(t1) * (r2 - i) + static_cast<long>(t2) * (s1 - i) -
                 static_cast<long>(s1) * r2 + static_cast<long>(i) * (i + 1) / 2;
        // <t1+t2+i>! / (<t1>! <t2>! <i>!) as a product of two q-binomials
        CycNum c = ca * cb * qBinom(p, r1 + r2 - i, r1) * qBinom(p, s1 + s2 - i, s2) *
                   oneMinusQ2Pow(p, i) * qBinom(p, t1 + t2 + i, t1) *
                   qBinom(p, t2 + i, t2) * qPower(p, e);
        if (!target.valid(p)) {
          // truncation must be automatic in this normalization
          if (!c.isZero())
            throw std::logic_error(
                "multiplyShuffle: nonzero coefficient on out-of-box target " +
                pbwStr(target));
          continue;
        }
        out.add(target, c);
      }
    }
  return out;
}

NicholsTensor2 coproduct(const NicholsElem& a) {
  int p = a.p();
  NicholsTensor2 out(p);
  for (const auto& [idx, c0] : a.terms()) {
    int r = idx.r, t = idx.t, s = idx.s;
    for (int j = 0; j <= r; ++j)
      for (int m = 0; m <= s; ++m)
        for (int k = 0; k <= t; ++k)
          for (int i = 0; i <= k; ++i) {
            long e = -static_cast<long>(i) * (i + 3) / 2 +
                     static_cast<long>(k - m - 2 * i) * j +
                     static_cast<long>(m) * (t - i - k);
            CycNum c = signPow(i,
                               c0 * qBinom(p, i + j, i) * qBinom(p, i + m, i) *
                                   qFac(p, i) * qPower(p, e));
            PbwIndex left{r - j, k - i, i + m};
            PbwIndex right{j + i, t - k, s - m};
            if (!left.valid(p) || !right.valid(p)) {
              if (!c.isZero())
                throw std::logic_error(
                    "coproduct: nonzero coefficient on out-of-box target");
              continue;
            }
            out.add(left, right, c);
          }
  }
  return out;
}

CycNum counit(const NicholsElem& a) {
  auto it = a.terms().find(PbwIndex{0, 0, 0});
  return it == a.terms().end() ? CycNum::zero(a.p()) : it->second;
}

namespace {

NicholsElem antipodeBasis(int p, const PbwIndex& idx) {
  int r = idx.r, t = idx.t, s = idx.s;
  NicholsElem sS = NicholsElem::basis(
      p, PbwIndex{0, 0, s},
      signPow(s, qPower(p, static_cast<long>(s) * (s - 1))));
  NicholsElem sT(p);
  for (int i = 0; i <= t; ++i) {
    long num = static_cast<long>(i) * (i - 1);
    if (num % 2 != 0)
      throw std::logic_error("antipode: half-integer exponent encountered");
    long e = num / 2 - static_cast<long>(i + 3) * t + static_cast<long>(t) * t;
    sT.add(PbwIndex{i, t - i, i}, signPow(t, qPower(p, e) * qFac(p, i)));
  }
  NicholsElem sR = NicholsElem::basis(
      p, PbwIndex{r, 0, 0},
      signPow(r, qPower(p, static_cast<long>(r) * (r - 1))));
  long e = static_cast<long>(r) * t - static_cast<long>(r) * s +
           static_cast<long>(t) * s;
  return multiplyShuffle(multiplyShuffle(sS, sT), sR).scaled(qPower(p, e));
}

}  // namespace

NicholsElem antipode(const NicholsElem& a) {
  int p = a.p();
  NicholsElem out(p);
  for (const auto& [idx, c] : a.terms()) out += antipodeBasis(p, idx).scaled(c);
  return out;
}

std::pair<int, int> pbwBidegree(const PbwIndex& i) {
  return {i.r + i.t, i.s + i.t};
}

NicholsTensor2 multiplyTensor2(const NicholsTensor2& A, const NicholsTensor2& B) {
  requireSameP(A.p(), B.p());
  int p = A.p();
  NicholsTensor2 out(p);
  for (const auto& [ka, ca] : A.terms())
    for (const auto& [kb, cb] : B.terms()) {
      auto [m1, m2] = pbwBidegree(ka.second);
      auto [n1, n2] = pbwBidegree(kb.first);
      CycNum braid = braidingBetweenBidegrees(p, m1, m2, n1, n2);
      NicholsElem left = multiplyShuffle(NicholsElem::basis(p, ka.first),
                                         NicholsElem::basis(p, kb.first));
      NicholsElem right = multiplyShuffle(NicholsElem::basis(p, ka.second),
                                          NicholsElem::basis(p, kb.second));
      CycNum c0 = ca * cb * braid;
      for (const auto& [il, cl] : left.terms())
        for (const auto& [ir, cr] : right.terms())
          out.add(il, ir, c0 * cl * cr);
    }
  return out;
}

namespace {

TensorElem letterElem(int p, int letter) {
  return TensorElem::ofWord(p, Word{static_cast<unsigned char>(letter)});
}

// F3 = F2 F1 - q^{-1} F1 F2 inside the tensor algebra.
TensorElem f3Tensor(int p) {
  TensorElem x = TensorElem::ofWord(p, Word{2, 1});
  x -= TensorElem::ofWord(p, Word{1, 2}).scaled(qPower(p, -1));
  return x;
}

TensorElem pbwWord(int p, const PbwIndex& idx) {
  TensorElem w = TensorElem::unit(p);
  for (int i = 0; i < idx.r; ++i) w = concatProduct(w, letterElem(p, 1));
  TensorElem f3 = f3Tensor(p);
  for (int i = 0; i < idx.t; ++i) w = concatProduct(w, f3);
  for (int i = 0; i < idx.s; ++i) w = concatProduct(w, letterElem(p, 2));
  return w;
}

std::mutex& tensorCacheMutex() {
  static std::mutex m;
  return m;
}

const TensorElem& pbwTensorCached(int p, const PbwIndex& idx, int maxGrade) {
  if (idx.grade() > maxGrade)
    throw std::invalid_argument("toTensor: grade above the oracle bound");
  static std::map<int, std::map<PbwIndex, TensorElem>> cache;
  std::lock_guard<std::mutex> lock(tensorCacheMutex());
  auto& perP = cache[p];
  auto it = perP.find(idx);
  if (it != perP.end()) return it->second;
  TensorElem symm = braidedSymmetrizer(pbwWord(p, idx), maxGrade);
  CycNum norm = qFac(p, idx.r) * qFac(p, idx.t) * qFac(p, idx.s) *
                oneMinusQ2Pow(p, idx.t);
  TensorElem img = symm.scaled(norm.inverse());
  return perP.emplace(idx, std::move(img)).first->second;
}

}  // namespace

TensorElem toTensor(const NicholsElem& x, int maxGrade) {
  int p = x.p();
  TensorElem out(p);
  for (const auto& [idx, c] : x.terms())
    out += pbwTensorCached(p, idx, maxGrade).scaled(c);
  return out;
}

std::vector<Check> serreCheck(int p) {
  std::vector<Check> checks;
  auto addCheck = [&checks](std::string name, bool pass, std::string detail) {
    checks.push_back(Check{std::move(name), pass, std::move(detail)});
  };

  // generator powers F1^p and F2^p under the symmetrizer
  for (int letter : {1, 2}) {
    Word w(static_cast<size_t>(p), static_cast<unsigned char>(letter));
    bool ok = braidedSymmetrizer(TensorElem::ofWord(p, w), p).isZero();
    addCheck("ideal-generator-power-f" + std::to_string(letter), ok,
             "symmetrizer annihilates the p-th letter power");
  }

  // double q-commutators (absent from the ideal at p=2)
  if (p == 2) {
    addCheck("ideal-double-brackets", true, "absent at p=2 (not ideal generators)");
  } else {
    for (int a : {1, 2}) {
      int b = 3 - a;
      TensorElem fa = letterElem(p, a), fb = letterElem(p, b);
      TensorElem x = concatProduct(concatProduct(fa, fa), fb);
      x -= concatProduct(concatProduct(fa, fb), fa)
               .scaled(qPower(p, 1) + qPower(p, -1));
      x += concatProduct(concatProduct(fb, fa), fa);
      bool ok = braidedSymmetrizer(x, 3).isZero();
      addCheck("ideal-double-bracket-" + std::to_string(a) + std::to_string(a) +
                   std::to_string(b),
               ok, "symmetrizer annihilates the double q-commutator");
    }
  }

  // mixed-generator power F3^p: the symmetrizer factors through
  // concatenation, so the image equals the p-fold shuffle power of the
  // symmetrized grade-2 element; cross-check directly when affordable.
  {
    TensorElem s3 = braidedSymmetrizer(f3Tensor(p), 2);
    TensorElem acc = TensorElem::unit(p);
    for (int i = 0; i < p; ++i) acc = shuffleProduct(acc, s3);
    bool ok = acc.isZero();
    std::string detail = "p-fold shuffle power of the symmetrized commutator";
    if (2 * p <= 8) {
      TensorElem word = TensorElem::unit(p);
      TensorElem f3 = f3Tensor(p);
      for (int i = 0; i < p; ++i) word = concatProduct(word, f3);
      TensorElem direct = braidedSymmetrizer(word, 2 * p);
      ok = ok && direct == acc;
      detail += "; agrees with the direct symmetrizer";
    }
    addCheck("ideal-generator-power-f3", ok, detail);
  }

  // rewritten commutation rules in the PBW product
  NicholsElem f1 = NicholsElem::basis(p, PbwIndex{1, 0, 0});
  NicholsElem f3 = NicholsElem::basis(p, PbwIndex{0, 1, 0});
  NicholsElem f2 = NicholsElem::basis(p, PbwIndex{0, 0, 1});
  addCheck("rewrite-f2-f3", multiplyConcat(f2, f3) ==
                                multiplyConcat(f3, f2).scaled(qPower(p, 1)),
           "F2 F3 = q F3 F2 in the PBW product");
  addCheck("rewrite-f3-f1", multiplyConcat(f3, f1) ==
                                multiplyConcat(f1, f3).scaled(qPower(p, 1)),
           "F3 F1 = q F1 F3 in the PBW product");

  // nilpotency of the three PBW generators
  for (const auto& [name, gen] :
       {std::pair<std::string, NicholsElem>{"f1", f1}, {"f3", f3}, {"f2", f2}}) {
    NicholsElem acc = NicholsElem::unit(p);
    for (int i = 0; i < p; ++i) acc = multiplyConcat(acc, gen);
    addCheck("nilpotency-" + name, acc.isZero(),
             "p-th power vanishes in the PBW product");
  }

  return checks;
}

}  // namespace w3oct
