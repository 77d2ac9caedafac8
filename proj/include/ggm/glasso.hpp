#pragma once

#include "ggm/model.hpp"
#include "ggm/sampling.hpp"
#include "ggm/solver_config.hpp"

namespace ggm {

struct GlassoFit {
    PrecisionMatrix theta;
    /// Final covariance estimate (the dual variable).
    Matrix w;
    SolverReport report;
};

/// Graphical lasso with an unpenalized diagonal:
///
///     minimize  -log det(Theta) + tr(S Theta) + lambda * sum_{i != j} |Theta_ij|
///
/// Block coordinate descent on the covariance estimate W. Each sweep visits
/// the columns in order and solves the column lasso
///
///     min_beta 1/2 beta^t W_11 beta - s_12^t beta + lambda ||beta||_1
///
/// with LassoCD (inner tolerance tol / 10, warm-started from the previous
/// sweep), then sets w_12 = W_11 beta. The diagonal stays at W_ii = S_ii.
///
/// W starts at the dual-feasible point (1 - t) S + t diag(S) with
/// t = min(1, lambda / max_{i!=j} |S_ij|), which is positive definite for any
/// lambda > 0 even when S is singular. lambda = 0 requires S to be positive
/// definite and starts from W = S.
///
/// Theta is recovered per column from W and beta, then symmetrized. Sweeps
/// stop when the Frobenius norm of the change in Theta is <= tol.
GlassoFit glasso_fit(const CovarianceEstimate& s, const SolverConfig& cfg);

/// Criterion value; +infinity when theta is not positive definite.
double glasso_objective(const CovarianceEstimate& s, const Matrix& theta, double lambda);

/// Largest stationarity violation of theta, comparing Theta^{-1} with S:
/// |.|_ii on the diagonal, |[Theta^{-1}]_ij - S_ij - lambda sign(Theta_ij)|
/// on active entries and (|[Theta^{-1}]_ij - S_ij| - lambda)_+ on zeros.
double glasso_kkt_residual(const CovarianceEstimate& s, const Matrix& theta, double lambda);

} // namespace ggm
