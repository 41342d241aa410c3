#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace qlogic {

/// Dense matrix of exact rationals, row-major rows.
using RationalMatrix = std::vector<std::vector<mpq_class>>;

struct LinearSolution {
  std::size_t rank = 0;
  bool consistent = true;
  /// Indices of pivot columns in the reduced row echelon form.
  std::vector<std::size_t> pivots;
  /// Basic solution with every free variable set to zero (if consistent).
  std::optional<std::vector<mpq_class>> particular;
};

/// Gauss–Jordan elimination of [A | rhs] over the rationals.
LinearSolution solve_exact(RationalMatrix a, std::vector<mpq_class> rhs);

}  // namespace qlogic
