#pragma once

#include "ggm/coefficients.hpp"
#include "ggm/sampling.hpp"
#include "ggm/solver_config.hpp"

namespace ggm {

struct CoefficientFit {
    CoefficientMatrix b;
    SolverReport report;
};

/// Symmetric parallel regression: minimizes
///
///     (1/2n) ||X - X B||_F^2 + sqrt(2) * lambda * sum_{a<b} sqrt(B_ab^2 + B_ba^2)
///
/// over zero-diagonal B by cyclic block coordinate descent on the pairs
/// (B_ab, B_ba), a < b, visited in lexicographic order. Each block update is
/// the exact minimizer: with residual columns R_j = X_j - sum_{k!=j} B_kj X_k,
///
///     z_ab = X_a^t R_b / n + B_ab,   z_ba = X_b^t R_a / n + B_ba,
///
/// followed by multivariate_soft_threshold(z, lambda). The closed form relies
/// on X_a^t X_a / n = 1, so the data must be standardized.
///
/// The residual correlations X^t R / n are kept as a p x p matrix and
/// updated through the Gram matrix, so a pair that stays at zero costs O(1)
/// and a moving pair O(p), independent of n.
///
/// Stops when the Frobenius norm of the change in B over a sweep is <= tol,
/// or after max_iter sweeps.
CoefficientFit spr_fit(const DataMatrix& x, const SolverConfig& cfg);
CoefficientFit spr_fit(const DataMatrix& x, const SolverConfig& cfg, const CoefficientMatrix& warm_start);

double spr_objective(const DataMatrix& x, const CoefficientMatrix& b, double lambda);

/// Largest first-order optimality violation over all pairs: the norm of the
/// partial gradient for an active pair, (||z|| - sqrt(2) * lambda)_+ for a
/// zero pair.
double spr_kkt_residual(const DataMatrix& x, const CoefficientMatrix& b, double lambda);

/// Smallest lambda with B = 0 optimal:
/// max_{a<b} ||(X_a^t X_b / n, X_b^t X_a / n)|| / sqrt(2).
double spr_null_lambda(const DataMatrix& x);

} // namespace ggm
