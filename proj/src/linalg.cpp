#include "sdyn/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sdyn {

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a(m);
  RationalMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  return det;
}

std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& columns,
                                            const RationalVector& rhs) {
  const std::size_t k = columns.size();
  const std::size_t n = rhs.size();
  // Augmented system, rows = coordinates.
  RationalMatrix a(n, RationalVector(k + 1, Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = columns[c][r];
    a[r][k] = rhs[r];
  }
  std::vector<std::size_t> pivot_row(k);
  std::size_t row = 0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) throw std::invalid_argument("solve_in_span: linearly dependent columns");
    std::swap(a[p], a[row]);
    Rational scale = 1 / a[row][col];
    for (auto& x : a[row]) x *= scale;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j <= k; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_row[col] = row++;
  }
  for (std::size_t r = row; r < n; ++r)
    if (a[r][k] != 0) return std::nullopt;
  RationalVector x(k);
  for (std::size_t c = 0; c < k; ++c) x[c] = a[pivot_row[c]][k];
  return x;
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
  RationalVector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace sdyn
