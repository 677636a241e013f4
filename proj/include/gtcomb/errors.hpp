#pragma once

#include <stdexcept>
#include <string>

namespace gtcomb {

/// Thrown when an enumeration would exceed its configured cap.
/// Carries the cap so callers (e.g. the CLI) can report it.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(const std::string& message, unsigned long long cap)
        : std::runtime_error(message), cap_(cap) {}

    unsigned long long cap() const noexcept { return cap_; }

private:
    unsigned long long cap_;
};

/// Thrown by text parsing (tableaux, words, rationals).  The message names
/// the offending location, e.g. the tableau row index.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace gtcomb
