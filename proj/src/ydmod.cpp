#include "w3oct/ydmod.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace w3oct {

namespace {

void requireCompatible(const YDElem& a, const YDElem& b) {
  if (a.p() != b.p() || a.label() != b.label())
    throw std::invalid_argument("ydmod: mixed root orders or vertex labels");
}

// Adds a term, insisting that any out-of-box target carries a zero
// coefficient (overflow must be killed by <p> = 0, never clipped by hand).
void addChecked(YDElem& out, const PbwIndex& idx, const CycNum& coeff) {
  if (!idx.valid(out.p())) {
    if (!coeff.isZero())
      throw std::logic_error(
          "ydmod: nonzero coefficient on out-of-box index " + pbwStr(idx));
    return;
  }
  out.add(idx, coeff);
}

CycNum oneMinusQ2(int p) { return CycNum::one(p) - qPower(p, 2); }

}  // namespace

YDElem YDElem::vacuum(int p, VertexLabel label) {
  YDElem v(p, label);
  v.add(PbwIndex{0, 0, 0}, CycNum::one(p));
  return v;
}

void YDElem::add(const PbwIndex& i, const CycNum& coeff) {
  if (!i.valid(p_))
    throw std::invalid_argument("YDElem::add: index outside the basis box " +
                                pbwStr(i));
  if (coeff.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(i, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.isZero()) terms_.erase(it);
  }
}

YDElem& YDElem::operator+=(const YDElem& o) {
  requireCompatible(*this, o);
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

YDElem& YDElem::operator-=(const YDElem& o) {
  requireCompatible(*this, o);
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

YDElem YDElem::scaled(const CycNum& s) const {
  YDElem out(p_, label_);
  if (s.isZero()) return out;
  for (const auto& [i, c] : terms_) {
    CycNum sc = c * s;
    if (!sc.isZero()) out.terms_.emplace(i, sc);
  }
  return out;
}

bool YDElem::operator==(const YDElem& o) const {
  return p_ == o.p_ && label_ == o.label_ && terms_ == o.terms_;
}

std::string YDElem::str() const {
  std::ostringstream os;
  if (terms_.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (const auto& [i, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")" << pbwStr(i);
    }
  }
  os << " (x) V{" << label_.n1 << "," << label_.n2 << "}";
  return os.str();
}

CycNum vertexBraiding(int p, int i, VertexLabel label) {
  if (i != 1 && i != 2)
    throw std::invalid_argument("vertexBraiding: letter must be 1 or 2");
  return qPower(p, 1 - static_cast<long>(i == 1 ? label.n1 : label.n2));
}

YDElem adjF1(const YDElem& v) {
  int p = v.p();
  VertexLabel lab = v.label();
  YDElem out(p, lab);
  CycNum one = CycNum::one(p);
  for (const auto& [idx, c] : v.terms()) {
    long r = idx.r, t = idx.t, s = idx.s;
    CycNum raise =
        c * qInt(p, r + 1) * (one - qPower(p, 2 * (r - s + t + 1 - lab.n1)));
    addChecked(out, PbwIndex{idx.r + 1, idx.t, idx.s}, raise);
    if (s >= 1) {
      CycNum swap = c * qPower(p, 2 * r - 2 * s + t - 2 * lab.n1 + 3) *
                    qInt(p, t + 1) * oneMinusQ2(p);
      addChecked(out, PbwIndex{idx.r, idx.t + 1, idx.s - 1}, -swap);
    }
  }
  return out;
}

YDElem adjF2(const YDElem& v) {
  int p = v.p();
  VertexLabel lab = v.label();
  YDElem out(p, lab);
  CycNum one = CycNum::one(p);
  for (const auto& [idx, c] : v.terms()) {
    long r = idx.r, t = idx.t, s = idx.s;
    if (r >= 1) {
      CycNum swap = c * qPower(p, 1 - r) * qInt(p, t + 1) * oneMinusQ2(p);
      addChecked(out, PbwIndex{idx.r - 1, idx.t + 1, idx.s}, swap);
    }
    CycNum raise = c * qPower(p, t - r) * qInt(p, s + 1) *
                   (one - qPower(p, 2 * (s + 1 - lab.n2)));
    addChecked(out, PbwIndex{idx.r, idx.t, idx.s + 1}, raise);
  }
  return out;
}

YDElem adjF3(const YDElem& v) {
  return adjF2(adjF1(v)) - adjF1(adjF2(v)).scaled(qPower(v.p(), -1));
}

YDElem actPbw(const PbwIndex& idx, const YDElem& v) {
  int p = v.p();
  YDElem w = v;
  for (int i = 0; i < idx.s; ++i) w = adjF2(w);
  for (int i = 0; i < idx.t; ++i) w = adjF3(w);
  for (int i = 0; i < idx.r; ++i) w = adjF1(w);
  // [r,t,s] = F1^r (x) F3-block^t (x) F2^s over <r>! <t>! <s>! with one
  // (1-q^2) per F3 factor, in the shuffle normalization the action respects
  CycNum norm = qFac(p, idx.r) * qFac(p, idx.t) * qFac(p, idx.s);
  CycNum base = oneMinusQ2(p);
  for (int i = 0; i < idx.t; ++i) norm *= base;
  return w.scaled(norm.inverse());
}

YDElem actNichols(const NicholsElem& x, const YDElem& v) {
  if (x.p() != v.p())
    throw std::invalid_argument("actNichols: mixed root orders");
  YDElem out(v.p(), v.label());
  for (const auto& [idx, c] : x.terms()) out += actPbw(idx, v).scaled(c);
  return out;
}

NicholsTensor2 coaction(const YDElem& v) {
  NicholsElem x(v.p());
  for (const auto& [idx, c] : v.terms()) x.add(idx, c);
  return coproduct(x);
}

SimpleModuleResult simpleModule(int p, int n1, int n2) {
  VertexLabel lab{n1, n2};
  std::map<PbwIndex, YDElem> rows;  // pivot index -> normalized reduced row
  auto reduce = [&rows](YDElem v) {
    while (!v.isZero()) {
      auto lead = v.terms().begin();
      auto it = rows.find(lead->first);
      if (it == rows.end()) break;
      v -= it->second.scaled(lead->second);
    }
    return v;
  };
  SimpleModuleResult result;
  std::deque<YDElem> queue;
  queue.push_back(YDElem::vacuum(p, lab));
  while (!queue.empty()) {
    YDElem v = reduce(std::move(queue.front()));
    queue.pop_front();
    if (v.isZero()) continue;
    v = v.scaled(v.terms().begin()->second.inverse());
    rows.emplace(v.terms().begin()->first, v);
    result.basis.push_back(v);
    if (result.basis.size() > static_cast<size_t>(p) * p * p)
      throw std::logic_error("simpleModule: dimension exceeds p^3");
    queue.push_back(adjF1(v));
    queue.push_back(adjF2(v));
  }
  result.dim = static_cast<int>(result.basis.size());
  return result;
}

namespace {

long barReduce(long x, int p) {
  long m = ((x % p) + p) % p;
  return m == 0 ? p : m;
}

long dTriangle(long a, long b) { return a * b * (a + b) / 2; }

}  // namespace

long dimFormula(int p, int n1, int n2) {
  long b1 = barReduce(n1, p), b2 = barReduce(n2, p);
  if (b1 + b2 <= p) return dTriangle(b1, b2);
  return dTriangle(b1, b2) - dTriangle(p - b1, p - b2);
}

std::vector<Check> moduleAxiomCheck(int p, int n1, int n2) {
  std::vector<Check> checks;
  VertexLabel lab{n1, n2};
  SimpleModuleResult mod = simpleModule(p, n1, n2);

  NicholsElem f1 = NicholsElem::basis(p, PbwIndex{1, 0, 0});
  NicholsElem f2 = NicholsElem::basis(p, PbwIndex{0, 0, 1});

  // products act as composites
  {
    bool ok = true;
    for (const NicholsElem* x : {&f1, &f2})
      for (const NicholsElem* y : {&f1, &f2}) {
        NicholsElem xy = multiplyShuffle(*x, *y);
        for (const YDElem& v : mod.basis)
          ok = ok && actNichols(xy, v) == actNichols(*x, actNichols(*y, v));
      }
    checks.push_back(Check{"action-respects-product", ok,
                           "generator products act as composed operators"});
  }

  // generator action agrees with the one induced by the Hopf data: for a
  // primitive generator F, F acts on z (x) V as F*z minus the double
  // braiding of F past z and the vertex times z*F
  {
    bool ok = true;
    for (int i : {1, 2}) {
      const NicholsElem& f = (i == 1) ? f1 : f2;
      int b1 = (i == 1) ? 1 : 0, b2 = 1 - b1;
      CycNum monodromy = vertexBraiding(p, i, lab) * vertexBraiding(p, i, lab);
      for (const YDElem& v : mod.basis) {
        YDElem expect(p, lab);
        for (const auto& [idx, c] : v.terms()) {
          NicholsElem z = NicholsElem::basis(p, idx);
          auto [m1, m2] = pbwBidegree(idx);
          CycNum chi = braidingBetweenBidegrees(p, b1, b2, m1, m2);
          NicholsElem res =
              multiplyShuffle(f, z) -
              multiplyShuffle(z, f).scaled(chi * monodromy);
          for (const auto& [ri, rc] : res.terms()) expect.add(ri, c * rc);
        }
        YDElem got = (i == 1) ? adjF1(v) : adjF2(v);
        ok = ok && got == expect;
      }
    }
    checks.push_back(Check{"action-from-hopf-data", ok,
                           "generator action matches product minus braided "
                           "opposite product with vertex monodromy"});
  }

  // the defining ideal acts by zero operators
  {
    auto a1 = [](const YDElem& v) { return adjF1(v); };
    auto a2 = [](const YDElem& v) { return adjF2(v); };
    auto powerKills = [&](auto op, const char* name) {
      bool ok = true;
      for (const YDElem& v : mod.basis) {
        YDElem w = v;
        for (int i = 0; i < p; ++i) w = op(w);
        ok = ok && w.isZero();
      }
      checks.push_back(
          Check{std::string("ideal-zero-power-") + name, ok,
                "p-th operator power annihilates the module"});
    };
    powerKills(a1, "f1");
    powerKills(a2, "f2");
    powerKills([](const YDElem& v) { return adjF3(v); }, "f3");

    CycNum qpq = qPower(p, 1) + qPower(p, -1);
    auto doubleBracketKills = [&](auto fa, auto fb, const char* name) {
      bool ok = true;
      for (const YDElem& v : mod.basis) {
        YDElem w = fa(fa(fb(v))) - fa(fb(fa(v))).scaled(qpq) + fb(fa(fa(v)));
        ok = ok && w.isZero();
      }
      checks.push_back(
          Check{std::string("ideal-zero-double-bracket-") + name, ok,
                "double q-commutator annihilates the module"});
    };
    doubleBracketKills(a1, a2, "112");
    doubleBracketKills(a2, a1, "221");
  }

  return checks;
}

}  // namespace w3oct
