#pragma once

#include "gtcomb/numeric.hpp"
#include "gtcomb/stabilizer.hpp"
#include "gtcomb/weight.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gtcomb {

/// Coxeter-style length of w at the weight: the number of same-row strand
/// inversions, i.e. pairs of strands with equal row label that swap their
/// relative order between the bottom (strand order of the weight) and the
/// top (after applying w).  Throws std::invalid_argument when w is not in
/// the extended stabilizer.
int length(const RowPermutation& w, const Weight& weight);

/// Generator degree by the linear-algebra formula:
/// dim N^- - dim(w N^- intersect N^-) - length(w).
int degreeFormula(const RowPermutation& w, const Weight& weight);

/// Generator degree by the diagram-crossing count.  Builds the minimal
/// strand diagram (bottom and top both in strand order, black strand (i,r)
/// wired to (i, sigma_i(r)), row-n strands vertical and counted with label
/// n) and evaluates
///   (adjacent-label crossings - 2 * same-label crossings) / 2.
/// The adjacent-label crossing total of such a diagram is always even; the
/// halving converts the raw diagram grading to the same units as
/// degreeFormula, with which it agrees everywhere.
int degreeCrossings(const RowPermutation& w, const Weight& weight);

/// True iff all entries lie in one Z-coset and, after sorting every row
/// ascending, all interlacing relations hold between adjacent rows (the
/// relations are evaluated directly through the cover convention:
/// value(i,s) <= value(i-1,s) < value(i,s+1) and
/// value(i,s) < value(i+1,s+1) <= value(i,s+1) wherever the indices exist).
bool isGtPattern(const Weight& weight);

/// Degrees of every extended-stabilizer element, identity first, then
/// sorted by flat one-line images.
struct DegreeReport {
    std::vector<std::pair<RowPermutation, int>> perElement;
    std::optional<int> minNontrivialDegree;  ///< absent when the stabilizer is trivial
    int zeroDegreeCount = 0;
};

DegreeReport degreeReport(const Weight& weight, std::uint64_t cap = 1'000'000);

/// Positivity check: a Gelfand-Tsetlin pattern should give every nontrivial
/// stabilizer element a strictly positive degree.
struct MazorchukReport {
    bool isPattern = false;
    bool allPositive = false;
    /// Nontrivial elements with degree <= 0, with their degrees.
    std::vector<std::pair<RowPermutation, int>> offenders;
};

MazorchukReport mazorchukReport(const Weight& weight, std::uint64_t cap = 1'000'000);

/// Trichotomy for 1-singular weights, by the codimension of N^- intersect
/// s N^- inside N^- (s the unique nontrivial stabilizer element):
/// codimension 0 -> Matrix2x2, 1 -> TwoSimples, >= 2 -> OneSimple.
enum class OneSingularType {
    Matrix2x2,
    TwoSimples,
    OneSimple,
};

std::string toString(OneSingularType type);

/// Throws std::invalid_argument unless the weight is exactly 1-singular.
OneSingularType oneSingularType(const Weight& weight);

/// Combinatorial dimension bounds attached to a weight.
struct BoundsReport {
    BigInt dimSumBound;       ///< order of the extended stabilizer
    BigInt gammaLevelBound;   ///< extended order / finite order
    /// Number of degree-0 stabilizer elements; present only when every
    /// generator degree is non-negative (the bound's hypothesis).  Also
    /// absent when the stabilizer exceeds the enumeration cap.
    std::optional<BigInt> sumSquaresBound;
};

BoundsReport bounds(const Weight& weight, std::uint64_t cap = 1'000'000);

} // namespace gtcomb
