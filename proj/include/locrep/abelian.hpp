#pragma once

#include <cstdint>
#include <vector>

#include "locrep/presentation.hpp"

namespace locrep {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix exponent_matrix(const GroupPresentation& p);

// Smith normal form diagonal of a rows x cols integer matrix, padded with
// zeros to `cols` entries: d_1 | d_2 | ... with zeros last.  Pivots are the
// smallest nonzero absolute value; arithmetic is overflow-checked
// (ArithmeticOverflow) rather than wrapping.
std::vector<std::int64_t> smith_diagonal(IntMatrix m, std::size_t cols);

// Smith diagonal of the exponent matrix; entry 0 is a free Z factor, entry 1
// a trivial factor.
std::vector<std::int64_t> abelianization(const GroupPresentation& p);

// Diagonal with the trivial factors (1s) removed.
std::vector<std::int64_t> invariant_factors(const std::vector<std::int64_t>& diagonal);

// "Z", "Z/2 + Z", "1" for the trivial group.
std::string describe_abelian(const std::vector<std::int64_t>& diagonal);

}  // namespace locrep
