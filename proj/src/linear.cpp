#include "qlogic/linear.hpp"

#include <stdexcept>

namespace qlogic {

LinearSolution solve_exact(RationalMatrix a, std::vector<mpq_class> rhs) {
  if (a.size() != rhs.size()) throw std::invalid_argument("solve_exact: row count mismatch");
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  for (const auto& r : a)
    if (r.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");

  LinearSolution out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    std::swap(rhs[pivot], rhs[row]);

    const mpq_class inv = 1 / a[row][col];
    for (std::size_t c = col; c < cols; ++c) a[row][c] *= inv;
    rhs[row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const mpq_class factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
      rhs[r] -= factor * rhs[row];
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  for (std::size_t r = row; r < rows; ++r)
    if (rhs[r] != 0) out.consistent = false;

  if (out.consistent) {
    std::vector<mpq_class> x(cols, 0);
    for (std::size_t r = 0; r < out.rank; ++r) x[out.pivots[r]] = rhs[r];
    out.particular = std::move(x);
  }
  return out;
}

}  // namespace qlogic
