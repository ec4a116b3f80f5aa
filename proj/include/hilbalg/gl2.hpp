#pragma once

#include <utility>
#include <vector>

#include "hilbalg/multipoly.hpp"

namespace charclass {

/// GL2 characters are symmetric Laurent polynomials in a, b with nonnegative
/// integer coefficients; irreducibles are indexed by highest weights (p, q),
/// p >= q, possibly negative (det twists).

corealg::MultiPoly gl2_character_zero();
corealg::MultiPoly parse_gl2_character(const std::string& text);
/// chi_{(p,q)} = (a^{p+1} b^q - a^q b^{p+1}) / (a - b) = sum a^{p-i} b^{q+i}.
corealg::MultiPoly gl2_irreducible_character(int p, int q);

/// Peels irreducible characters from the lexicographically highest weight
/// down; throws if a peel drives some coefficient negative (the input was not
/// a genuine character). The result is sorted ascending; multiplicities are
/// repeated entries.
std::vector<std::pair<int, int>> gl2_decompose(const corealg::MultiPoly& chi);

/// Sum of the irreducible characters of the listed weights.
corealg::MultiPoly gl2_reconstruct(const std::vector<std::pair<int, int>>& weights);

}  // namespace charclass
