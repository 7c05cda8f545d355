#include "kronlab/linalg.hpp"

#include <utility>

namespace kronlab {

int matrix_rank(CMatrix m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  Cyclotomic prev(1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Cyclotomic inv_prev = prev.inverse();
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) * inv_prev;
      }
      m[i][c] = Cyclotomic(0);
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<std::vector<Cyclotomic>> solve_exact(const CMatrix& a, const std::vector<Cyclotomic>& b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  CMatrix m(rows, std::vector<Cyclotomic>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  std::vector<size_t> pivcol;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Cyclotomic inv = m[r][c].inverse();
    for (size_t j = c; j <= cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Cyclotomic f = m[i][c];
      for (size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!m[i][cols].is_zero()) return std::nullopt;
  if (pivcol.size() != cols) return std::nullopt;
  std::vector<Cyclotomic> x(cols);
  for (size_t i = 0; i < r; ++i) x[pivcol[i]] = m[i][cols];
  return x;
}

}  // namespace kronlab
