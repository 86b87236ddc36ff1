#pragma once

#include <map>
#include <utility>
#include <vector>

#include "w3oct/checks.hpp"
#include "w3oct/nichols.hpp"

namespace w3oct {

// Label of the one-dimensional vertex space V^{n1,n2}. The action depends on
// the labels only mod p (asserted by tests), but any integers are accepted.
struct VertexLabel {
  int n1 = 1, n2 = 1;
  auto operator<=>(const VertexLabel&) const = default;
};

// Element of the one-vertex module: PBW-indexed coefficients attached to a
// fixed vertex label.
class YDElem {
 public:
  YDElem() = default;
  YDElem(int p, VertexLabel label) : p_(p), label_(label) {}

  static YDElem vacuum(int p, VertexLabel label);  // 1 (x) V, coefficient 1

  int p() const { return p_; }
  VertexLabel label() const { return label_; }
  const std::map<PbwIndex, CycNum>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  void add(const PbwIndex& i, const CycNum& coeff);
  YDElem& operator+=(const YDElem& o);
  YDElem& operator-=(const YDElem& o);
  friend YDElem operator+(YDElem a, const YDElem& b) { return a += b; }
  friend YDElem operator-(YDElem a, const YDElem& b) { return a -= b; }
  YDElem scaled(const CycNum& s) const;
  bool operator==(const YDElem& o) const;

  std::string str() const;

 private:
  int p_ = 0;
  VertexLabel label_;
  std::map<PbwIndex, CycNum> terms_;
};

// Braiding factor of the letter F_i past the vertex: q^{1-n_i}.
CycNum vertexBraiding(int p, int i, VertexLabel label);

// Left adjoint action of the two generators on the one-vertex module.
// Index-increasing overflow vanishes automatically through <p> = 0
// (asserted); index-decreasing terms at the boundary are absent.
YDElem adjF1(const YDElem& v);
YDElem adjF2(const YDElem& v);
// Action of F3 as the operator q-commutator of the generator actions.
YDElem adjF3(const YDElem& v);

// Action of a PBW basis element F1^r F3^t F2^s (rightmost factor acts first)
// and its linear extension.
YDElem actPbw(const PbwIndex& idx, const YDElem& v);
YDElem actNichols(const NicholsElem& x, const YDElem& v);

// Coaction: the coproduct applied with the vertex riding along in the right
// tensor factor. Key order: (left PBW index, right PBW index).
NicholsTensor2 coaction(const YDElem& v);

struct SimpleModuleResult {
  int dim = 0;
  // Echelonized basis of the cyclic submodule generated from the vacuum.
  std::vector<YDElem> basis;
};

// Breadth-first closure of the vacuum under adjF1/adjF2 with exact row
// reduction over the cyclotomic field.
SimpleModuleResult simpleModule(int p, int n1, int n2);

// Closed-form dimension of the simple one-vertex module.
long dimFormula(int p, int n1, int n2);

// Consistency of the action with the algebra: products act as composites on
// the generators, and all defining ideal generators act as zero operators.
std::vector<Check> moduleAxiomCheck(int p, int n1, int n2);

}  // namespace w3oct
