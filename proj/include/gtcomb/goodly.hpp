#pragma once

#include "gtcomb/weight.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gtcomb {

/// A run word (k, k-1, ..., k-len+1): the letters descend by one from top.
/// Members of GL have top <= n-1; members of GL' have top == n.  Which set
/// a factor belongs to is contextual (it depends on n), so the factor
/// stores only its shape.
struct LyndonFactor {
    int top = 0;  ///< first (largest) letter
    int len = 0;  ///< number of letters; lowest letter is top - len + 1

    int lowest() const { return top - len + 1; }
    std::vector<int> letters() const;

    auto operator<=>(const LyndonFactor&) const = default;
};

/// Word order with the prefix-larger convention: (i_1,...,i_{k-1}) is
/// larger than (i_1,...,i_k).  Concretely f < g iff f.top < g.top, or the
/// tops agree and f is the longer factor.
bool wordLess(const LyndonFactor& f, const LyndonFactor& g);
bool wordLessEq(const LyndonFactor& f, const LyndonFactor& g);

/// A goodly word: a multiset of GL factors (stored weakly increasing in the
/// word order) followed by one GL' factor per slot of row n.
struct GoodlyWord {
    std::vector<LyndonFactor> a;  ///< weakly increasing under wordLessEq
    std::vector<LyndonFactor> b;  ///< exactly v_n factors, position q per slot

    std::vector<int> flatten() const;

    bool operator==(const GoodlyWord&) const = default;
};

/// The n(n-1)/2 words (k, ..., j) with j <= k <= n-1, in word order.
std::vector<LyndonFactor> glWords(int n);

/// The n words (n, ..., j) with 1 <= j <= n, in word order.
std::vector<LyndonFactor> glPrimeWords(int n);

/// Letter counts of a word: content(letters)[i-1] = multiplicity of i,
/// sized by the largest letter present.
std::vector<int> wordContent(const std::vector<int>& letters);

/// The unique factorization of a word into weakly increasing GL factors
/// followed by GL' factors, or absent when no such factorization exists.
/// Every letter of each slot 1..n must occur (the content must be a valid
/// dimension vector).  Letters outside [1, n] throw std::invalid_argument.
std::optional<GoodlyWord> factorizeGoodly(const std::vector<int>& letters, int n);

/// All goodly words of content exactly dims, sorted lexicographically on
/// the flattened letter sequences.  Throws CapExceededError (suggesting the
/// counting routine) when the total exceeds cap.
std::vector<GoodlyWord> enumerateGoodly(const std::vector<int>& dims,
                                        std::uint64_t cap = 10'000'000);

/// The canonical weight realizing a goodly word for a strictly increasing
/// central character (lambda_{n,1} < ... < lambda_{n,v_n}).  With p = |a|,
/// the new values mu_k = lambda_{n,1} - p + (k-1) are the consecutive
/// rationals immediately below lambda_{n,1}; row i receives mu_k for every
/// a_k containing letter i and lambda_{n,q} for every b_q containing i.
/// Rows come out in decreasing order.  By construction
/// wordOfWeight(result) == flatten(bi).
/// Throws std::invalid_argument on content/central mismatch or a
/// non-increasing central character.
Weight weightOfGoodly(const GoodlyWord& bi, const std::vector<Rational>& central);

/// The forward map bi -> word of the weight realizing bi; equals
/// flatten(bi) by the roundtrip invariant.
std::vector<int> redGoodWord(const GoodlyWord& bi, const std::vector<Rational>& central);

/// Parse letters from text; ',' and '|' both separate letters, so factored
/// ("2,1|2|3") and plain ("2,1,2,3") spellings are interchangeable.
std::vector<int> parseWord(const std::string& text);

/// Render with '|' between factors and ',' within, e.g. "2,1|2|3|3|3".
std::string renderWord(const GoodlyWord& word);

/// Render a plain letter sequence, comma-separated.
std::string renderLetters(const std::vector<int>& letters);

} // namespace gtcomb
