#pragma once

#include <vector>

#include "plectic/scalar.hpp"

namespace plectic {

struct FieldSolution {
  int rank = 0;
  bool consistent = false;
  bool unique = false;
  std::vector<ScalarExpr> x; // valid if consistent (free variables set to 0)
};

/// Solve A x = b over the rational function field. Rows are cleared of
/// denominators, eliminated fraction-free (Bareiss), and any solution is
/// verified by exact back-substitution into the original system.
FieldSolution field_solve(const std::vector<std::vector<ScalarExpr>>& A,
                          const std::vector<ScalarExpr>& b);

/// Generic rank of a matrix over the rational function field.
int field_rank(const std::vector<std::vector<ScalarExpr>>& A);

} // namespace plectic
