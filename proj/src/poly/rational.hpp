#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace aligator {

// The coefficient field Q. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as construction goes through make_rational.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

// Parses "12", "-3/4" or a decimal literal such as "0.25" exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// q^e for any integer exponent; q must be nonzero when e < 0.
Rational pow(const Rational& q, long e);

BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

}  // namespace aligator
