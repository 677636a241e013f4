#include "gtcomb/goodly.hpp"

#include "gtcomb/counting.hpp"
#include "gtcomb/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>

namespace gtcomb {

std::vector<int> LyndonFactor::letters() const {
    std::vector<int> out;
    out.reserve(len);
    for (int letter = top; letter > top - len; --letter) {
        out.push_back(letter);
    }
    return out;
}

bool wordLess(const LyndonFactor& f, const LyndonFactor& g) {
    if (f.top != g.top) {
        return f.top < g.top;
    }
    return f.len > g.len;  // the longer word is the smaller one (prefixes are larger)
}

bool wordLessEq(const LyndonFactor& f, const LyndonFactor& g) {
    return !wordLess(g, f);
}

std::vector<int> GoodlyWord::flatten() const {
    std::vector<int> out;
    for (const LyndonFactor& f : a) {
        for (int letter : f.letters()) {
            out.push_back(letter);
        }
    }
    for (const LyndonFactor& f : b) {
        for (int letter : f.letters()) {
            out.push_back(letter);
        }
    }
    return out;
}

std::vector<LyndonFactor> glWords(int n) {
    std::vector<LyndonFactor> out;
    for (int top = 1; top <= n - 1; ++top) {
        for (int len = top; len >= 1; --len) {
            out.push_back({top, len});
        }
    }
    return out;  // ascending in the word order: by top, longer first
}

std::vector<LyndonFactor> glPrimeWords(int n) {
    std::vector<LyndonFactor> out;
    for (int len = n; len >= 1; --len) {
        out.push_back({n, len});
    }
    return out;
}

std::vector<int> wordContent(const std::vector<int>& letters) {
    int maxLetter = 0;
    for (int letter : letters) {
        maxLetter = std::max(maxLetter, letter);
    }
    std::vector<int> content(maxLetter, 0);
    for (int letter : letters) {
        if (letter < 1) {
            throw std::invalid_argument("letters must be positive");
        }
        ++content[letter - 1];
    }
    return content;
}

std::optional<GoodlyWord> factorizeGoodly(const std::vector<int>& letters, int n) {
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    for (int letter : letters) {
        if (letter < 1 || letter > n) {
            throw std::invalid_argument("letter " + std::to_string(letter) +
                                        " outside [1, " + std::to_string(n) + "]");
        }
    }
    if (letters.empty()) {
        return std::nullopt;
    }

    // Maximal runs descending by one; the decomposition is forced.
    std::vector<LyndonFactor> runs;
    int runTop = letters[0];
    int runLen = 1;
    for (std::size_t i = 1; i < letters.size(); ++i) {
        if (letters[i] == letters[i - 1] - 1) {
            ++runLen;
        } else {
            runs.push_back({runTop, runLen});
            runTop = letters[i];
            runLen = 1;
        }
    }
    runs.push_back({runTop, runLen});

    GoodlyWord word;
    bool inBPart = false;
    for (const LyndonFactor& run : runs) {
        if (run.top == n) {
            inBPart = true;
            word.b.push_back(run);
        } else {
            if (inBPart) {
                return std::nullopt;  // a GL factor after a GL' factor
            }
            if (!word.a.empty() && !wordLessEq(word.a.back(), run)) {
                return std::nullopt;  // a-part not weakly increasing
            }
            word.a.push_back(run);
        }
    }

    // The content must be a valid dimension vector: every letter 1..n
    // occurs (in particular the word has a b-part).
    const std::vector<int> content = wordContent(letters);
    if (static_cast<int>(content.size()) != n) {
        return std::nullopt;
    }
    for (int count : content) {
        if (count == 0) {
            return std::nullopt;
        }
    }
    return word;
}

namespace {

void validateDims(const std::vector<int>& dims) {
    if (dims.empty()) {
        throw std::invalid_argument("dims must be non-empty");
    }
    for (int v : dims) {
        if (v < 1) {
            throw std::invalid_argument("dims entries must be >= 1");
        }
    }
}

/// Depth-first enumeration: choose a weakly increasing sequence of GL
/// factors (a multiset), then one GL' factor per b-slot, consuming the
/// letter budget exactly.
class Enumerator {
public:
    Enumerator(const std::vector<int>& dims, std::vector<GoodlyWord>& out)
        : dims_(dims), n_(static_cast<int>(dims.size())),
          remaining_(dims), gl_(glWords(n_)), glPrime_(glPrimeWords(n_)),
          out_(out) {}

    void run() {
        current_.a.clear();
        current_.b.clear();
        chooseA(0);
    }

private:
    bool consume(const LyndonFactor& f) {
        for (int letter = f.lowest(); letter <= f.top; ++letter) {
            if (remaining_[letter - 1] == 0) {
                for (int undo = f.lowest(); undo < letter; ++undo) {
                    ++remaining_[undo - 1];
                }
                return false;
            }
            --remaining_[letter - 1];
        }
        return true;
    }

    void restore(const LyndonFactor& f) {
        for (int letter = f.lowest(); letter <= f.top; ++letter) {
            ++remaining_[letter - 1];
        }
    }

    void chooseA(std::size_t fromFactor) {
        // Continue with b once the a-part is settled; the a-multiset is
        // kept weakly increasing by only moving forward through gl_.
        chooseB(0);
        for (std::size_t i = fromFactor; i < gl_.size(); ++i) {
            if (!consume(gl_[i])) {
                continue;
            }
            current_.a.push_back(gl_[i]);
            chooseA(i);
            current_.a.pop_back();
            restore(gl_[i]);
        }
    }

    void chooseB(std::size_t slot) {
        if (slot == static_cast<std::size_t>(dims_[n_ - 1])) {
            for (int left : remaining_) {
                if (left != 0) {
                    return;
                }
            }
            out_.push_back(current_);
            return;
        }
        for (const LyndonFactor& f : glPrime_) {
            if (!consume(f)) {
                continue;
            }
            current_.b.push_back(f);
            chooseB(slot + 1);
            current_.b.pop_back();
            restore(f);
        }
    }

    const std::vector<int>& dims_;
    int n_;
    std::vector<int> remaining_;
    std::vector<LyndonFactor> gl_;
    std::vector<LyndonFactor> glPrime_;
    GoodlyWord current_;
    std::vector<GoodlyWord>& out_;
};

} // namespace

std::vector<GoodlyWord> enumerateGoodly(const std::vector<int>& dims,
                                        std::uint64_t cap) {
    validateDims(dims);
    const BigInt total = countGoodly(dims);
    if (total > cap) {
        std::ostringstream message;
        message << "enumeration of " << total << " goodly words exceeds the cap of "
                << cap << "; use the counting routine instead";
        throw CapExceededError(message.str(), cap);
    }

    std::vector<GoodlyWord> out;
    out.reserve(static_cast<std::size_t>(total));
    Enumerator(dims, out).run();

    std::sort(out.begin(), out.end(), [](const GoodlyWord& x, const GoodlyWord& y) {
        return x.flatten() < y.flatten();
    });
    return out;
}

Weight weightOfGoodly(const GoodlyWord& bi, const std::vector<Rational>& central) {
    const std::vector<int> letters = bi.flatten();
    if (letters.empty()) {
        throw std::invalid_argument("empty goodly word");
    }
    const std::vector<int> dims = wordContent(letters);
    const int n = static_cast<int>(dims.size());
    for (int v : dims) {
        if (v == 0) {
            throw std::invalid_argument("word content is not a valid dimension vector");
        }
    }
    if (static_cast<int>(bi.b.size()) != dims[n - 1]) {
        throw std::invalid_argument("content mismatch: the word needs " +
                                    std::to_string(dims[n - 1]) +
                                    " row-n factors, got " +
                                    std::to_string(bi.b.size()));
    }
    if (central.size() != bi.b.size()) {
        throw std::invalid_argument("central character size mismatch: expected " +
                                    std::to_string(bi.b.size()) + ", got " +
                                    std::to_string(central.size()));
    }
    for (std::size_t q = 1; q < central.size(); ++q) {
        if (!(central[q - 1] < central[q])) {
            throw std::invalid_argument("central character must be strictly increasing");
        }
    }
    for (const LyndonFactor& f : bi.b) {
        if (f.top != n) {
            throw std::invalid_argument("b-factor does not start with letter n");
        }
    }

    const int p = static_cast<int>(bi.a.size());
    std::vector<std::vector<Rational>> rows(n);
    for (int k = 1; k <= p; ++k) {
        const LyndonFactor& f = bi.a[k - 1];
        const Rational mu = central[0] - p + (k - 1);
        for (int letter = f.lowest(); letter <= f.top; ++letter) {
            rows[letter - 1].push_back(mu);
        }
    }
    for (std::size_t q = 0; q < bi.b.size(); ++q) {
        const LyndonFactor& f = bi.b[q];
        for (int letter = f.lowest(); letter <= f.top; ++letter) {
            rows[letter - 1].push_back(central[q]);
        }
    }
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(), std::greater<>());
    }
    return Weight(std::move(rows));
}

std::vector<int> redGoodWord(const GoodlyWord& bi, const std::vector<Rational>& central) {
    return wordOfWeight(weightOfGoodly(bi, central));
}

std::vector<int> parseWord(const std::string& text) {
    std::vector<int> letters;
    std::string current;
    auto flush = [&]() {
        if (current.empty()) {
            throw ParseError("malformed word '" + text + "'");
        }
        try {
            const Rational value = parseRational(current);
            if (!isInteger(value) || value < 1 || value > 10'000) {
                throw ParseError("");
            }
            letters.push_back(static_cast<int>(numerator(value)));
        } catch (const ParseError&) {
            throw ParseError("malformed word letter '" + current + "'");
        }
        current.clear();
    };
    for (char c : text) {
        if (c == ',' || c == '|') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current.push_back(c);
        }
    }
    flush();
    return letters;
}

std::string renderWord(const GoodlyWord& word) {
    std::ostringstream out;
    bool firstFactor = true;
    auto emit = [&](const LyndonFactor& f) {
        if (!firstFactor) {
            out << '|';
        }
        firstFactor = false;
        const std::vector<int> letters = f.letters();
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i > 0) {
                out << ',';
            }
            out << letters[i];
        }
    };
    for (const LyndonFactor& f : word.a) {
        emit(f);
    }
    for (const LyndonFactor& f : word.b) {
        emit(f);
    }
    return out.str();
}

std::string renderLetters(const std::vector<int>& letters) {
    std::ostringstream out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << letters[i];
    }
    return out.str();
}

} // namespace gtcomb
