#pragma once

#include "ggm/spr.hpp"

namespace ggm {

/// Parallel (node-wise) lasso regression. Column j of B solves
///
///     min_beta (1/2n) ||X_j - X_{-j} beta||^2 + lambda * ||beta||_1
///
/// by cyclic coordinate descent (LassoCD on the Gram matrix). The p columns
/// are independent problems: each one stops on its own when the norm of its
/// sweep change is <= tol, so a column's result does not depend on the others
/// or on the order they are solved in. Sweeps run in lockstep so the objective
/// trace is that of the whole criterion
///
///     (1/2n) ||X - X B||_F^2 + lambda * sum_{i != j} |B_ij|.
///
/// report.final_delta is the largest per-column change in the last sweep.
CoefficientFit pr_fit(const DataMatrix& x, const SolverConfig& cfg);
CoefficientFit pr_fit(const DataMatrix& x, const SolverConfig& cfg, const CoefficientMatrix& warm_start);

/// Coefficients of the single regression of variable j on the rest, length p
/// with a zero in position j. Identical to column j of pr_fit.
Vector pr_fit_column(const DataMatrix& x, int j, const SolverConfig& cfg);

double pr_objective(const DataMatrix& x, const CoefficientMatrix& b, double lambda);

/// Largest lasso optimality violation over all off-diagonal coefficients.
double pr_kkt_residual(const DataMatrix& x, const CoefficientMatrix& b, double lambda);

/// Smallest lambda with B = 0 optimal: max_{j != k} |X_k^t X_j / n|.
double pr_null_lambda(const DataMatrix& x);

} // namespace ggm
