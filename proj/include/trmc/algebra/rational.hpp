#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace trmc {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation, which is exactly the BigRational invariant.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace; reduces.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer binomial(const Integer& n, long k);  // generalized: n(n-1)...(n-k+1)/k!, 0 for k < 0
Integer factorial(long n);
Rational pow(const Rational& base, long exponent);
Integer ipow(const Integer& base, unsigned long exponent);

Integer lcm_of_denominators(const std::vector<Rational>& v);
Integer gcd_of(const std::vector<Integer>& v);

}  // namespace trmc
