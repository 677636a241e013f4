#include "gtcomb/subspace.hpp"

#include <algorithm>

namespace gtcomb {

CoordinateSubspace fullBasis(const std::vector<int>& dims) {
    CoordinateSubspace out;
    const int n = static_cast<int>(dims.size());
    for (int k = 1; k <= n - 1; ++k) {
        for (int r = 1; r <= dims[k - 1]; ++r) {
            for (int s = 1; s <= dims[k]; ++s) {
                out.push_back({k, r, s});
            }
        }
    }
    return out;
}

namespace {

template <typename Keep>
CoordinateSubspace selectTriples(const Weight& weight, Keep keep) {
    CoordinateSubspace out;
    for (int k = 1; k <= weight.numRows() - 1; ++k) {
        for (int r = 1; r <= weight.rowSize(k); ++r) {
            for (int s = 1; s <= weight.rowSize(k + 1); ++s) {
                const Rational diff = weight.at(k, r) - weight.at(k + 1, s);
                if (keep(diff)) {
                    out.push_back({k, r, s});
                }
            }
        }
    }
    return out;
}

} // namespace

CoordinateSubspace nLambda(const Weight& weight) {
    return selectTriples(weight, [](const Rational& diff) { return isInteger(diff); });
}

CoordinateSubspace nMinus(const Weight& weight) {
    return selectTriples(weight, [](const Rational& diff) {
        return isInteger(diff) && diff >= 0;
    });
}

CoordinateSubspace act(const RowPermutation& perm, const CoordinateSubspace& sub) {
    CoordinateSubspace out;
    out.reserve(sub.size());
    for (const BasisTriple& t : sub) {
        out.push_back({t.k, perm.image(t.k, t.r), perm.image(t.k + 1, t.s)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gtcomb
