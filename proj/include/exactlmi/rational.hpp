#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace exactlmi {

using Integer = mpz_class;
/// GMP rationals are kept canonical (reduced, positive denominator, zero is 0/1).
using Rational = mpq_class;

/// Parses "p/q" or "p" with decimal integers and an optional leading minus.
Rational parse_rational(std::string_view text);

/// Inverse of parse_rational: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Decimal rendering with `digits` digits after the point, rounded to nearest.
std::string to_decimal(const Rational& q, int digits);

int sign(const Rational& q);
int sign(const Integer& z);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// gcd of numerators of the entries; zero when all entries vanish.
Integer content(const std::vector<Integer>& v);

/// Number of bits of |z|.
std::size_t bit_length(const Integer& z);

/// Binomial coefficient with C(a, b) = 0 for b < 0 or b > a.
Integer binomial(long a, long b);

}  // namespace exactlmi
