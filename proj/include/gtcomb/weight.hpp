#pragma once

#include "gtcomb/numeric.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace gtcomb {

/// A cell (row, slot) of the index rectangle Omega = {(i,r) : 1 <= i <= n,
/// 1 <= r <= v_i}.  Both coordinates are 1-based.
struct OmegaIndex {
    int row = 0;
    int slot = 0;

    auto operator<=>(const OmegaIndex&) const = default;
};

/// A weight: one exact rational per cell of Omega for a dimension vector
/// v = (v_1, ..., v_n).  Rows are stored bottom-to-top; row n is the fixed
/// central character.  Equality is slot-wise (weights are points, not
/// orbits; see gammaCanonical for the orbit-level view).
class Weight {
public:
    /// rows[i-1] holds row i in slot order; every row must be non-empty.
    explicit Weight(std::vector<std::vector<Rational>> rows);

    int numRows() const { return static_cast<int>(rows_.size()); }
    int rowSize(int row) const { return static_cast<int>(rows_[row - 1].size()); }
    std::vector<int> dims() const;

    /// Entry at (row, slot), both 1-based.
    const Rational& at(int row, int slot) const { return rows_[row - 1][slot - 1]; }

    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    bool operator==(const Weight&) const = default;

private:
    std::vector<std::vector<Rational>> rows_;
};

/// All of Omega sorted ascending by the strand key x(i,s) = value - i*eps -
/// s*eps^2 for an infinitesimal eps: value ascending, ties broken by row
/// descending, then slot descending.  Exact comparisons only.
std::vector<OmegaIndex> strandOrder(const Weight& weight);

/// The word of a weight: the row indices of Omega read off in strand order.
std::vector<int> wordOfWeight(const Weight& weight);

/// Relation between (k,r) and (k+1,s) determined by the sign of the
/// difference when it is an integer.
enum class Cover {
    Below,         ///< value(k,r) - value(k+1,s) is a negative integer
    AboveOrEqual,  ///< value(k,r) - value(k+1,s) is a non-negative integer
    Incomparable,  ///< the difference is not an integer
};

/// The order data of a weight: one cover matrix per adjacent row pair plus
/// the generated transitive relation.  closure holds ordered pairs (a, b)
/// meaning b is reachable from a along the cover arrows (a Below-arrow
/// points up a row; an AboveOrEqual-arrow points down a row).
struct PartialOrderRelation {
    std::vector<int> dims;
    /// covers[k-1][r-1][s-1] relates (k,r) to (k+1,s), k in [1, n-1].
    std::vector<std::vector<std::vector<Cover>>> covers;
    std::vector<std::pair<OmegaIndex, OmegaIndex>> closure;  ///< sorted

    bool operator==(const PartialOrderRelation&) const = default;
};

PartialOrderRelation partialOrder(const Weight& weight);

/// True iff the two weights have the same dims, every slot-wise difference
/// is an integer, and their order data coincide.  Throws
/// std::invalid_argument when the dims differ.
bool weightsEquivalent(const Weight& a, const Weight& b);

/// Parse a tableau: rows bottom-to-top separated by ';', entries as exact
/// rationals separated by ','.  Entries are stored exactly as written.
/// Throws ParseError naming the offending row index.
Weight parseTableau(const std::string& text);

/// Render a tableau in canonical form: rows bottom-to-top separated by ';',
/// each row's entries in decreasing order.
std::string renderTableau(const Weight& weight);

} // namespace gtcomb
