#pragma once

#include "ggm/model.hpp"
#include "ggm/sampling.hpp"
#include "ggm/solver_config.hpp"

namespace ggm {

struct PartialCorrelationTest {
    double rho_hat = 0.0;
    double t_stat = 0.0;
    int df = 0;
    double p_value = 1.0;
};

/// Two-sided Student p-value, P(|T_df| >= |t|) = I_{df/(df+t^2)}(df/2, 1/2).
double student_two_sided_p(double t, int df);

/// t = sqrt(df) * rho / sqrt(1 - rho^2) with its two-sided p-value.
PartialCorrelationTest partial_correlation_test(double rho_hat, int df);

struct MhtFit {
    EdgeSet edges;
    /// rho_ij = -K_ij / sqrt(K_ii K_jj) with K the inverse empirical covariance.
    Matrix partial_correlation;
    Matrix p_values;
    int df = 0;
    /// Per-edge level after the configured correction.
    double level = 0.0;
};

/// Partial-correlation multiple testing. Inverts the empirical covariance,
/// tests every pair with df = n - p - 2 and keeps {i, j} when the p-value is
/// below alpha (alpha / (p(p-1)/2) under Bonferroni).
///
/// Throws NotApplicable when n <= p + 2 or the covariance is singular.
MhtFit mht_fit(const DataMatrix& x, const SolverConfig& cfg);

} // namespace ggm
