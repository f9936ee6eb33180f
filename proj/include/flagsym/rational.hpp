#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace flagsym {

/// Exact rational scalar used for inner products, Kahler parameters and pairings.
using Rational = mpq_class;

/// num/den in lowest terms. den must be nonzero.
Rational make_rational(long num, long den);

/// Numerator of an integral rational; throws std::domain_error otherwise.
long to_integer(const Rational& q);

std::string to_string(const Rational& q);

/// Parses "3", "-2", "7/4". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace flagsym
