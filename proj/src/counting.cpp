#include "gtcomb/counting.hpp"

#include "gtcomb/goodly.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gtcomb {

namespace {

/// The letter-content state space for letters 1..m with per-letter caps:
/// states are indexed in mixed radix so that adding contents adds indices.
class ContentSpace {
public:
    explicit ContentSpace(std::vector<int> caps) : caps_(std::move(caps)) {
        strides_.resize(caps_.size());
        std::size_t stride = 1;
        for (std::size_t i = 0; i < caps_.size(); ++i) {
            strides_[i] = stride;
            stride *= static_cast<std::size_t>(caps_[i]) + 1;
        }
        size_ = stride;
        coords_.resize(size_);
        std::vector<int> c(caps_.size(), 0);
        for (std::size_t idx = 0; idx < size_; ++idx) {
            coords_[idx] = c;
            for (std::size_t i = 0; i < caps_.size(); ++i) {
                if (++c[i] <= caps_[i]) {
                    break;
                }
                c[i] = 0;
            }
        }
    }

    std::size_t size() const { return size_; }
    const std::vector<int>& coords(std::size_t idx) const { return coords_[idx]; }

    /// Index of a content vector (must be within the caps).
    std::size_t indexOf(const std::vector<int>& c) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            idx += strides_[i] * static_cast<std::size_t>(c[i]);
        }
        return idx;
    }

    /// True iff a >= b coordinate-wise.
    static bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) {
                return false;
            }
        }
        return true;
    }

    /// a + b staying within the caps, or nullopt.
    bool sumWithin(const std::vector<int>& a, const std::vector<int>& b,
                   std::size_t& idxOut) const {
        idxOut = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const int sum = a[i] + b[i];
            if (sum > caps_[i]) {
                return false;
            }
            idxOut += strides_[i] * static_cast<std::size_t>(sum);
        }
        return true;
    }

private:
    std::vector<int> caps_;
    std::vector<std::size_t> strides_;
    std::vector<std::vector<int>> coords_;
    std::size_t size_ = 0;
};

/// Content of a factor on the letters 1..m (row n is tracked implicitly).
std::vector<int> factorContent(const LyndonFactor& f, int m) {
    std::vector<int> c(m, 0);
    for (int letter = f.lowest(); letter <= std::min(f.top, m); ++letter) {
        c[letter - 1] = 1;
    }
    return c;
}

/// Multisets of exactly h GL' factors, tabulated by content: processes one
/// factor type at a time with a bounded multiplicity loop.
std::vector<std::vector<BigInt>> blockTable(const ContentSpace& space, int m, int n,
                                            int h) {
    std::vector<std::vector<BigInt>> table(
        static_cast<std::size_t>(h) + 1, std::vector<BigInt>(space.size()));
    table[0][0] = 1;
    for (const LyndonFactor& f : glPrimeWords(n)) {
        const std::vector<int> delta = factorContent(f, m);
        auto next = table;  // multiplicity 0 of this type
        for (int used = 0; used <= h; ++used) {
            for (std::size_t idx = 0; idx < space.size(); ++idx) {
                if (table[used][idx] == 0) {
                    continue;
                }
                std::vector<int> c = space.coords(idx);
                for (int copies = 1; used + copies <= h; ++copies) {
                    bool fits = true;
                    for (std::size_t i = 0; i < c.size(); ++i) {
                        c[i] += delta[i];
                    }
                    std::size_t target = 0;
                    if (!space.sumWithin(c, std::vector<int>(c.size(), 0), target)) {
                        fits = false;
                    }
                    if (!fits) {
                        break;
                    }
                    next[used + copies][target] += table[used][idx];
                }
            }
        }
        table = std::move(next);
    }
    return table;
}

} // namespace

BigInt countGoodly(const std::vector<int>& dims, const std::vector<int>& blocks) {
    if (dims.empty()) {
        throw std::invalid_argument("dims must be non-empty");
    }
    for (int v : dims) {
        if (v < 1) {
            throw std::invalid_argument("dims entries must be >= 1");
        }
    }
    const int n = static_cast<int>(dims.size());
    const int vn = dims[n - 1];
    if (std::accumulate(blocks.begin(), blocks.end(), 0) != vn) {
        throw std::invalid_argument("blocks must sum to the last dims entry");
    }
    for (int h : blocks) {
        if (h < 1) {
            throw std::invalid_argument("blocks entries must be >= 1");
        }
    }

    const int m = n - 1;
    std::vector<int> caps(dims.begin(), dims.end() - 1);
    const ContentSpace space{caps};

    // Phase A: multisets of GL factors, counted once by processing factor
    // types in a fixed order with an in-place unbounded knapsack.
    std::vector<BigInt> acc(space.size());
    acc[0] = 1;
    for (const LyndonFactor& f : glWords(n)) {
        const std::vector<int> delta = factorContent(f, m);
        const std::size_t deltaIdx = space.indexOf(delta);
        for (std::size_t idx = 0; idx < space.size(); ++idx) {
            if (space.dominates(space.coords(idx), delta)) {
                acc[idx] += acc[idx - deltaIdx];
            }
        }
    }

    const bool regular =
        std::all_of(blocks.begin(), blocks.end(), [](int h) { return h == 1; });
    if (regular) {
        // One ordered GL' choice per slot of row n.
        std::vector<std::vector<int>> deltas;
        for (const LyndonFactor& f : glPrimeWords(n)) {
            deltas.push_back(factorContent(f, m));
        }
        for (int layer = 0; layer < vn; ++layer) {
            std::vector<BigInt> next(space.size());
            for (std::size_t idx = 0; idx < space.size(); ++idx) {
                if (acc[idx] == 0) {
                    continue;
                }
                for (const std::vector<int>& delta : deltas) {
                    std::size_t target = 0;
                    if (space.sumWithin(space.coords(idx), delta, target)) {
                        next[target] += acc[idx];
                    }
                }
            }
            acc = std::move(next);
        }
    } else {
        for (int h : blocks) {
            const auto table = blockTable(space, m, n, h);
            const std::vector<BigInt>& layer = table[static_cast<std::size_t>(h)];
            std::vector<BigInt> next(space.size());
            for (std::size_t idx = 0; idx < space.size(); ++idx) {
                if (acc[idx] == 0) {
                    continue;
                }
                for (std::size_t other = 0; other < space.size(); ++other) {
                    if (layer[other] == 0) {
                        continue;
                    }
                    std::size_t target = 0;
                    if (space.sumWithin(space.coords(idx), space.coords(other),
                                        target)) {
                        next[target] += acc[idx] * layer[other];
                    }
                }
            }
            acc = std::move(next);
        }
    }
    return acc[space.indexOf(caps)];
}

BigInt countGoodly(const std::vector<int>& dims) {
    if (dims.empty()) {
        throw std::invalid_argument("dims must be non-empty");
    }
    return countGoodly(dims, std::vector<int>(static_cast<std::size_t>(dims.back()), 1));
}

} // namespace gtcomb
