#pragma once

#include <gmpxx.h>

#include <string>

namespace kronlab {

// Always canonical: gmp keeps mpq_class reduced with positive denominator
// as long as every constructor path goes through canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// "p/q" with an explicit denominator, even when q = 1.
std::string to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

// r^e for any integer e (r != 0 when e < 0).
Rational rpow(const Rational& r, long e);
Integer ipow(long base, unsigned e);

double to_double(const Rational& r);

}  // namespace kronlab
