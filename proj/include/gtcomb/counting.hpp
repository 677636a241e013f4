#pragma once

#include "gtcomb/numeric.hpp"

#include <vector>

namespace gtcomb {

/// Number of goodly words of content dims, with the b-part grouped by
/// blocks: blocks = (h_1, ..., h_l) must sum to v_n.  Within each block the
/// GL' factors form an unordered multiset of the given size; the blocks
/// themselves are ordered.  The all-ones composition is the regular case
/// (a fully ordered b-tuple).
///
/// Implemented as an exact dynamic program over letter-content sub-vectors;
/// agrees with enumerateGoodly wherever both run.
BigInt countGoodly(const std::vector<int>& dims, const std::vector<int>& blocks);

/// Regular-case count: blocks = (1, ..., 1).
BigInt countGoodly(const std::vector<int>& dims);

} // namespace gtcomb
