#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bipoisson {

/// Arbitrary-precision exact fraction. gmp keeps it in lowest terms with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0). Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace bipoisson
