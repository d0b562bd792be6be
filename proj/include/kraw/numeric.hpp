#pragma once

#include <gmpxx.h>

#include <string>

namespace kraw {

// All matrix entries are exact.  Int is an arbitrary-precision integer,
// Rat an arbitrary-precision rational kept in canonical lowest terms.
using Int = mpz_class;
using Rat = mpq_class;

// C(n, k); zero when k > n.
Int binomial(unsigned long n, unsigned long k);

Int factorial(unsigned long n);

// 2^e as an Int.
Int pow2(unsigned long e);

Int ipow(const Int& base, unsigned long e);
Rat rpow(const Rat& base, unsigned long e);

// Rising factorial q (q+1) ... (q+n-1); empty product is 1.
Rat rising_factorial(const Rat& q, unsigned long n);

bool is_integer(const Rat& q);

// Canonical text forms: integers in base 10, rationals as "n" or "n/d"
// with d > 0 and gcd(n, d) = 1.
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

// Inverse of to_string; throws DomainError on malformed tokens or zero
// denominators.
Int parse_int(const std::string& token);
Rat parse_rat(const std::string& token);

} // namespace kraw
