#include "chromalg/linalg.hpp"

#include <utility>

namespace chromalg {

namespace {

// Reduces m in place to row echelon form; returns the pivot column of each
// pivot row.
std::vector<int> echelon(RationalMatrix& m, int ncols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      mpq_class f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(echelon(m, static_cast<int>(m[0].size())).size());
}

std::optional<std::vector<mpq_class>> solve_in_span(
    const std::vector<std::vector<mpq_class>>& columns,
    const std::vector<mpq_class>& target) {
  const std::size_t rows = target.size();
  const int ncols = static_cast<int>(columns.size());
  RationalMatrix aug(rows, std::vector<mpq_class>(ncols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (int c = 0; c < ncols; ++c) aug[r][c] = columns[c][r];
    aug[r][ncols] = target[r];
  }
  auto pivots = echelon(aug, ncols + 1);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  std::vector<mpq_class> x(ncols);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug[i][ncols] / aug[i][pivots[i]];
  return x;
}

}  // namespace chromalg
