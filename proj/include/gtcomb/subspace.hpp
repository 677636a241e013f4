#pragma once

#include "gtcomb/stabilizer.hpp"
#include "gtcomb/weight.hpp"

#include <compare>
#include <vector>

namespace gtcomb {

/// Names the basis vector h^{(k)}_{r,s} of the matter space N, which pairs
/// slot r of row k with slot s of row k+1 (1 <= k <= n-1).
struct BasisTriple {
    int k = 0;
    int r = 0;
    int s = 0;

    auto operator<=>(const BasisTriple&) const = default;
};

/// A coordinate subspace of N: a sorted, duplicate-free set of basis
/// triples.
using CoordinateSubspace = std::vector<BasisTriple>;

/// The full basis of N; its size is sum_k v_k * v_{k+1}.
CoordinateSubspace fullBasis(const std::vector<int>& dims);

/// N_lambda: triples whose value difference value(k,r) - value(k+1,s) is an
/// integer.
CoordinateSubspace nLambda(const Weight& weight);

/// N_lambda^-: triples whose value difference is a non-negative integer.
/// Always a subset of nLambda.
CoordinateSubspace nMinus(const Weight& weight);

/// The transformed subspace w(S): (k, r, s) -> (k, sigma_k(r), sigma_{k+1}(s))
/// with sigma_n the identity.  Preserves size.
CoordinateSubspace act(const RowPermutation& perm, const CoordinateSubspace& sub);

} // namespace gtcomb
