#include "gtcomb/numeric.hpp"

#include "gtcomb/errors.hpp"

#include <cctype>
#include <cstddef>
#include <sstream>

namespace gtcomb {

bool isInteger(const Rational& q) {
    return denominator(q) == 1;
}

bool integerDifference(const Rational& a, const Rational& b) {
    return isInteger(Rational(a - b));
}

BigInt factorial(int m) {
    if (m < 0) {
        throw std::invalid_argument("factorial of a negative number");
    }
    BigInt out = 1;
    for (int i = 2; i <= m; ++i) {
        out *= i;
    }
    return out;
}

namespace {

std::string trimmed(const std::string& text) {
    std::size_t first = 0;
    std::size_t last = text.size();
    while (first < last && std::isspace(static_cast<unsigned char>(text[first]))) {
        ++first;
    }
    while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) {
        --last;
    }
    return text.substr(first, last - first);
}

/// Strict integer literal: optional sign, then at least one digit.
BigInt parseIntStrict(const std::string& text, const std::string& original) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        ++pos;
    }
    if (pos == text.size()) {
        throw ParseError("malformed rational '" + original + "'");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("malformed rational '" + original + "'");
        }
    }
    return BigInt(text);
}

} // namespace

Rational parseRational(const std::string& text) {
    const std::string t = trimmed(text);
    if (t.empty()) {
        throw ParseError("malformed rational '" + text + "'");
    }
    const std::size_t slash = t.find('/');
    if (slash != std::string::npos) {
        const BigInt num = parseIntStrict(trimmed(t.substr(0, slash)), text);
        const BigInt den = parseIntStrict(trimmed(t.substr(slash + 1)), text);
        if (den == 0) {
            throw ParseError("zero denominator in rational '" + text + "'");
        }
        return Rational(num, den);
    }
    const std::size_t dot = t.find('.');
    if (dot != std::string::npos) {
        const std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        const std::size_t places = t.size() - dot - 1;
        if (places == 0) {
            throw ParseError("malformed rational '" + text + "'");
        }
        const BigInt num = parseIntStrict(digits, text);
        BigInt den = 1;
        for (std::size_t i = 0; i < places; ++i) {
            den *= 10;
        }
        return Rational(num, den);
    }
    return Rational(parseIntStrict(t, text));
}

std::string toString(const Rational& q) {
    std::ostringstream out;
    if (isInteger(q)) {
        out << numerator(q);
    } else {
        out << numerator(q) << '/' << denominator(q);
    }
    return out.str();
}

} // namespace gtcomb
