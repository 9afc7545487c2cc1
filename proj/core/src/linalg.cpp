#include "lrb/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "lrb/errors.hpp"

namespace lrb {

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = k ? static_cast<int>(b[0].size()) : 0;
  Matrix out(n, std::vector<Rational>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < out[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

bool mat_is_zero(const Matrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

namespace {

// Row-echelon reduction in place; returns pivot columns.
std::vector<int> reduce(Matrix& m) {
  std::vector<int> pivots;
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int matrix_rank(Matrix m) {
  return static_cast<int>(reduce(m).size());
}

std::vector<std::vector<Rational>> nullspace(Matrix m) {
  int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  std::vector<int> pivots = reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      // After full reduction each pivot row reads x_pivot + sum(coef * x_free) = 0.
      v[pivots[r]] = -m[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

using ZPoly = std::vector<BigInt>;  // integer polynomial, coeff of x^k at k

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  ztrim(out);
  return out;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

// Exact division; the Bareiss identity guarantees divisibility.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
  if (den.empty()) throw StructureError("polynomial division by zero");
  if (num.empty()) return {};
  ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigInt(0));
  const BigInt& lead = den.back();
  for (int k = static_cast<int>(num.size()) - static_cast<int>(den.size()); k >= 0; --k) {
    BigInt c = num[k + den.size() - 1];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
      throw StructureError("inexact polynomial division in fraction-free elimination");
    c /= lead;
    q[k] = c;
    for (size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  ztrim(num);
  if (!num.empty()) throw StructureError("inexact polynomial division (remainder)");
  return q;
}

}  // namespace

Poly charpoly(const Matrix& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return {Rational(1)};
  BigInt d = denominator_lcm(m);
  // Integer matrix a = d * m; char(m)(x) = d^-n * char(a)(d x).
  std::vector<std::vector<ZPoly>> w(n, std::vector<ZPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational scaled = m[i][j] * Rational(d);
      BigInt a = scaled.get_num();  // canonical, denominator 1
      ZPoly p;
      if (a != 0) p.push_back(-a);
      if (i == j) {
        p.resize(2, BigInt(0));
        p[1] = 1;
      }
      ztrim(p);
      w[i][j] = std::move(p);
    }
  ZPoly prev{BigInt(1)};
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w[k][k].empty()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!w[i][k].empty()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) throw StructureError("charpoly pivot breakdown");
      std::swap(w[k], w[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w[i][j] = zdiv_exact(zsub(zmul(w[i][j], w[k][k]), zmul(w[i][k], w[k][j])), prev);
    prev = w[k][k];
  }
  ZPoly det = w[n - 1][n - 1];
  if (sign < 0)
    for (auto& c : det) c = -c;
  Poly out(n + 1, Rational(0));
  // char(m)(x) = sum_k det_k d^(k-n) x^k.
  Rational dq(d);
  for (size_t k = 0; k < det.size(); ++k) {
    Rational f(det[k]);
    for (size_t i = k; i < static_cast<size_t>(n); ++i) f /= dq;
    out[k] = f;
  }
  return out;
}

Poly poly_from_roots(const std::vector<std::pair<Rational, long long>>& roots) {
  Poly p{Rational(1)};
  for (const auto& [root, mult] : roots)
    for (long long i = 0; i < mult; ++i) {
      Poly q(p.size() + 1, Rational(0));
      for (size_t k = 0; k < p.size(); ++k) {
        q[k + 1] += p[k];
        q[k] -= root * p[k];
      }
      p = std::move(q);
    }
  return p;
}

bool poly_equal(const Poly& a, const Poly& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    Rational x = i < a.size() ? a[i] : Rational(0);
    Rational y = i < b.size() ? b[i] : Rational(0);
    if (x != y) return false;
  }
  return true;
}

std::string poly_to_string(const Poly& p) {
  std::ostringstream out;
  bool first = true;
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    if (p[k] == 0 && !(first && k == 0)) continue;
    if (!first) out << " + ";
    out << "(" << to_string(p[k]) << ")";
    if (k > 0) out << "x^" << k;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace lrb
