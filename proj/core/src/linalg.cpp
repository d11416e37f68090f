#include "cliffsig/linalg.hpp"

#include <cstddef>

namespace cliffsig {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<size_t> rref(RationalMatrix& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = m[row][col];
    for (size_t c = col; c < cols; ++c) m[row][c] /= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(RationalMatrix m) {
  return static_cast<int>(rref(m).size());
}

std::vector<std::vector<Rational>> null_space(RationalMatrix m) {
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cliffsig
