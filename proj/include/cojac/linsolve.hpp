#ifndef COJAC_LINSOLVE_HPP
#define COJAC_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "cojac/expr.hpp"
#include "cojac/rational.hpp"

namespace cojac {

/// Solves A x = b over the rational-function field by fraction-free (Bareiss)
/// elimination on the denominator-cleared polynomial matrix. A is m x n with
/// m >= n and must have full column rank as a symbolic matrix; throws
/// NeedsChartRestrictionError when a pivot column is identically zero and
/// InternalConsistencyError when the system is symbolically inconsistent.
std::vector<Expr> linear_solve_symbolic(const std::vector<std::vector<Expr>>& a,
                                        const std::vector<Expr>& b, int nvars);

/// Exact pointwise solve; nullopt when the matrix is singular or the system
/// inconsistent at the point.
std::optional<std::vector<Rational>> linear_solve_rational(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b);

/// Rank of an exact matrix, by Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rational>> a);

}  // namespace cojac

#endif
