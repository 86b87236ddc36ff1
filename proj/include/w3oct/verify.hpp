#pragma once

#include <cstdint>
#include <vector>

#include "w3oct/checks.hpp"

namespace w3oct {

// Closed-form shuffle product vs the brute-force symmetrizer oracle:
// toTensor(a * b) == shuffleProduct(toTensor a, toTensor b) for every valid
// PBW pair with total grade <= gradeBound.
Check oracleEquivalenceCheck(int p, int gradeBound = 8);

// The two closed-form products agree after the symmetrizer-normalization
// rescale [r,t,s] -> <r>!<t>!<s>!(1-q^2)^t [r,t,s], on the full p^3 x p^3
// basis.
Check normalizationEquivalenceCheck(int p);

// Associativity of one product on `triples` random triples (seeded).
Check associativityCheck(int p, bool shuffleNormalization, int triples, std::uint64_t seed);

// Coassociativity, the homomorphism property of the coproduct, both antipode
// axioms, and agreement of the closed-form antipode with the axiom-derived
// one. Binary sweeps cover all basis pairs when p^6 is small (p = 2) and a
// seeded sample otherwise.
std::vector<Check> hopfChecks(int p, int samplePairs = 2000, std::uint64_t seed = 12345);

// Dimension table row of the one-vertex module sweep.
struct YdDimRow {
  int n1 = 0, n2 = 0;
  long computed = 0, formula = 0;
};
std::vector<YdDimRow> ydmodDimsTable(int p, int range);
Check ydmodDimsCheck(int p, int range);

// Vertex-dimension row (3, 3, 2p-1, 3p-2, 2p-1) for the five marked momenta.
Check vertexDimensionRowCheck(int p);

// stateField consistency: the label dimension formula, the vertex dimension,
// and the highest-weight eigenvalue coincide, with parameters (p-n1, p-n2),
// for 1 <= n1,n2 <= range.
Check stateFieldCheck(int p, int range);

// Aggregated sweeps backing the CLI verify commands.
std::vector<Check> verifyNichols(int p, int gradeBound = 8);
std::vector<Check> verifyYdmod(int p);
std::vector<Check> verifyCft(int p);

}  // namespace w3oct
