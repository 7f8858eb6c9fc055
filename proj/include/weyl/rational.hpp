#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weyl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Serializes as "num/den" with an explicit denominator, e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational& r);

/// Short form for display: "3", "-1/2".
std::string to_display_string(const Rational& r);

/// Accepts "a", "-a", "a/b". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Rational make_rational(const Integer& num, const Integer& den);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace weyl
