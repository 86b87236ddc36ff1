#pragma once

#include <map>
#include <string>
#include <vector>

#include "w3oct/checks.hpp"
#include "w3oct/freefield.hpp"

namespace w3oct {

// The eight spin-(3p-2) primaries generated from e^{p phi_a + p phi_b} by
// long-screening residues, keyed "W", "Wa", "Wb", "Wab", "Wba", "Waba",
// "Wbab", "Waabb".
struct OctupletResult {
  std::map<std::string, FieldExpr> fields;
  std::vector<Check> checks;
  // Ratio between the two routes into the endpoint field (nonzero).
  Rational closureRatio = 0;
};

// Build the chain and verify: every field nonzero, homogeneous with the
// expected polynomial degree and exponential part, a dimension-(3p-2)
// primary of both currents with vanishing spin-3 zero-mode eigenvalue,
// annihilated by both short screenings; the four zero-arrows and the two
// endpoint arrows vanish; the two endpoint routes are proportional; the two
// dashed arrows land on the adjacent chain fields up to nonzero factors.
OctupletResult octupletChain(int p);

// The OPE structure among the octuplet fields: identity channel with pole
// order 6p-4, spin-2 channel at 6p-6 with its derivative at half strength at
// 6p-7 and no spin-3 admixture, the cross pairs with the (-1)^{p+1} sign
// pattern, the regular pairs, and the leading spin-(3p-2) channels.
std::vector<Check> octupletOPEStructure(int p);

}  // namespace w3oct
