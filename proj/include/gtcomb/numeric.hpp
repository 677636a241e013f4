#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gtcomb {

/// Arbitrary-precision integer.  Counts of goodly words overflow 64 bits
/// well before the sizes this library targets, so all counters use BigInt.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number.  All weight entries and comparisons are exact;
/// the library performs no floating-point arithmetic anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// True iff q is an integer (denominator 1 in lowest terms).
bool isInteger(const Rational& q);

/// True iff a - b is an integer.
bool integerDifference(const Rational& a, const Rational& b);

/// m! as a BigInt; m must be >= 0.
BigInt factorial(int m);

/// Parse an exact rational from text.  Accepts "p", "p/q", and plain
/// decimals such as "-1.5" (converted exactly).  Throws ParseError on
/// malformed input.
Rational parseRational(const std::string& text);

/// Render as "p" for integers, "p/q" otherwise.
std::string toString(const Rational& q);

} // namespace gtcomb
