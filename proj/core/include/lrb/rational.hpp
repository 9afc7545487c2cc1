#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lrb {

// All arithmetic in this library is exact. Rationals are GMP-backed; there is
// no floating point anywhere on a result path.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
Rational parse_rational(const std::string& text);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

std::string to_string(const BigInt& value);

// Least common multiple of the denominators of a matrix, used to clear
// fractions before integer-only elimination.
BigInt denominator_lcm(const std::vector<std::vector<Rational>>& rows);

}  // namespace lrb
