#pragma once

// Small exact linear algebra over Q. Matrices are row-major vectors of rows;
// the sizes involved here never exceed the rank of E8.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lietk/rational.hpp"

namespace lietk::linalg {

using Matrix = std::vector<RationalVector>;

/// Row-reduces in place and returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }

template <typename Vec>
std::size_t rank_of(const std::vector<Vec>& rows) {
  Matrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
  return rank(std::move(m));
}

/// Solves a * x = b for square nonsingular a; nullopt when singular.
inline std::optional<RationalVector> solve(const Matrix& a, const RationalVector& b) {
  const std::size_t n = a.size();
  Matrix aug(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

}  // namespace lietk::linalg
