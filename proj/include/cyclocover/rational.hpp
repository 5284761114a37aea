#pragma once

#include <gmpxx.h>
#include <string>

namespace cyclocover {

using Rational = mpq_class;

// Parses "a" or "a/b" with optional sign, arbitrary size; canonicalizes.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

// Canonical "a" or "a/b" (no spaces, lowest terms, sign on the numerator).
std::string to_string(const Rational& r);

} // namespace cyclocover
