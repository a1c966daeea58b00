#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hankelwalk {

/// Arbitrary-precision rational in lowest terms with positive denominator.
using Rational = mpq_class;

/// Canonical "p/q" form; integers are written as "p/1".
std::string to_string(const Rational& q);

/// Accepts "p/q" or "p" with an optional leading sign. Throws Error(ParseError)
/// on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

std::vector<std::string> to_strings(const std::vector<Rational>& values);

}  // namespace hankelwalk
