#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace aperylab {

// Arbitrary-precision integers and rationals. Rationals are kept in
// canonical form: gcd(|num|, den) = 1 and den >= 1.
using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form; throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer pow_integer(const Integer& base, unsigned long exp);
Rational pow_rational(const Rational& base, unsigned long exp);

/// Exponent of p in x. Pre: x != 0, p >= 2.
unsigned long integer_valuation(const Integer& x, const Integer& p);

/// Exponent of p in q (negative when p divides the denominator).
/// Pre: q != 0, p >= 2.
long rational_valuation(const Rational& q, const Integer& p);

inline std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& q);

} // namespace aperylab
