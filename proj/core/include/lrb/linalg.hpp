#pragma once

#include <vector>

#include "lrb/rational.hpp"

namespace lrb {

using Matrix = std::vector<std::vector<Rational>>;
// Dense polynomial, coefficient of x^k at index k.
using Poly = std::vector<Rational>;

Matrix identity_matrix(int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
bool mat_is_zero(const Matrix& a);

// Rank over the rationals (Gaussian elimination on a copy).
int matrix_rank(Matrix m);

// Basis of {x : m x = 0}, as columns returned row-major (each entry of the
// result is one basis vector).
std::vector<std::vector<Rational>> nullspace(Matrix m);

// Characteristic polynomial det(xI - m), monic of degree n. Computed by
// fraction-free (Bareiss) elimination over integer polynomials after
// clearing denominators, so every intermediate step is exact.
Poly charpoly(const Matrix& m);

// Expands prod (x - root)^multiplicity.
Poly poly_from_roots(const std::vector<std::pair<Rational, long long>>& roots);

bool poly_equal(const Poly& a, const Poly& b);
std::string poly_to_string(const Poly& p);

}  // namespace lrb
