#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncode {

/// Exact arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses "7", "-3", or "p/q" (q != 0). Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Canonical text: integers without a denominator, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);

}  // namespace ncode
