#include "clustertrop/linalg.hpp"

#include <stdexcept>

namespace clustertrop {

namespace {

// In-place row echelon form; returns pivot columns.
std::vector<std::size_t> echelon(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (std::size_t j = c; j < m[row].size(); ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = c; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  return echelon(rows, cols).size();
}

int affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  RationalMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(std::move(diffs)));
}

std::optional<RationalVector> solve(RationalMatrix a, RationalVector b, bool* unique) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  if (a.empty()) return RationalVector{};
  const std::size_t n = a.front().size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  const auto pivots = echelon(a, n);
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (a[r][n] != 0) return std::nullopt;
  if (unique) *unique = pivots.size() == n;
  RationalVector x(n, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][n];
  return x;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace clustertrop
