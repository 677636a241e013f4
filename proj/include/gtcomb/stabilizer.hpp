#pragma once

#include "gtcomb/weight.hpp"

#include <cstdint>
#include <vector>

namespace gtcomb {

/// An element of W = S_{v_1} x ... x S_{v_{n-1}}: one permutation per row
/// below the central character.  Row n is always fixed.  rows[i-1][r-1] is
/// the 1-based image of slot r in row i.
struct RowPermutation {
    std::vector<std::vector<int>> rows;

    static RowPermutation identity(const std::vector<int>& dims);

    /// Image of (row, slot); rows without a stored permutation (row n, or
    /// anything past the stored prefix) map slots to themselves.
    int image(int row, int slot) const;

    RowPermutation compose(const RowPermutation& inner) const;  ///< this after inner
    RowPermutation inverse() const;
    bool isIdentity() const;

    /// Concatenated one-line images; the sort key for deterministic output
    /// (the identity is lexicographically first).
    std::vector<int> flat() const;

    bool operator==(const RowPermutation&) const = default;
};

/// Serialize as rows joined by ';', images within a row joined by ','
/// (identity for v = (1,2) is "1;1,2").  Row n is omitted.
std::string renderPermutation(const RowPermutation& perm);

/// Sizes of the stabilizers of a weight inside W (finite) and inside the
/// extended group (permutations that move entries by integers).  Both are
/// products of symmetric groups on groups of entries per row: Z-coset
/// groups for the extended stabilizer, equal-value groups for the finite
/// one.
struct StabilizerDescriptor {
    /// Per row i <= n-1: multiset of Z-coset group sizes, sorted descending.
    std::vector<std::vector<int>> cosetSizes;
    /// Per row i <= n-1: multiset of equal-value group sizes, sorted descending.
    std::vector<std::vector<int>> valueSizes;
    BigInt orderHat;     ///< product of (coset group size)! over all rows
    BigInt orderW;       ///< product of (value group size)! over all rows
    BigInt cosetIndex;   ///< orderHat / orderW, the statistic S
};

StabilizerDescriptor stabilizer(const Weight& weight);

/// Membership tests: the extended stabilizer requires every entry to map to
/// an entry in its own Z-coset; the finite stabilizer requires equal values.
bool inExtendedStabilizer(const Weight& weight, const RowPermutation& perm);
bool inFiniteStabilizer(const Weight& weight, const RowPermutation& perm);

/// All elements of the extended stabilizer, identity first, then sorted by
/// flat() lexicographically.  Throws CapExceededError when the order
/// exceeds cap.
std::vector<RowPermutation> enumerateStabilizer(const Weight& weight,
                                                std::uint64_t cap = 1'000'000);

struct WeightClassification {
    bool integral = false;   ///< extended stabilizer is all of W and N_lambda is full
    int singularRank = 0;    ///< sum over rows/coset groups of (size - 1)
    bool isSeed = false;     ///< extended and finite stabilizers coincide
};

WeightClassification classifyWeight(const Weight& weight);

/// Orbit-level canonical form: every row sorted decreasing.  Two weights
/// have equal canonical forms iff they lie in one W-orbit.
Weight gammaCanonical(const Weight& weight);

} // namespace gtcomb
