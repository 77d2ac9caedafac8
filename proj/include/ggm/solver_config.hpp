#pragma once

#include <chrono>
#include <limits>
#include <vector>

namespace ggm {

enum class Correction { none, bonferroni };

struct SolverConfig {
    double lambda = 0.0;
    /// Threshold on the Frobenius norm of the iterate change over one sweep.
    double tol = 1e-6;
    int max_iter = 1000;
    /// Multiple-testing estimator only.
    double alpha = 0.05;
    Correction correction = Correction::none;
    /// Record the criterion value after every sweep in SolverReport::objective_trace.
    bool record_trace = false;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct SolverReport {
    int iterations = 0;
    bool converged = false;
    double final_delta = std::numeric_limits<double>::infinity();
    double objective = std::numeric_limits<double>::quiet_NaN();
    std::chrono::duration<double, std::milli> runtime{0};
    /// Criterion after each sweep, first entry is the starting point.
    std::vector<double> objective_trace;
    /// Graphical lasso only: primal minus dual objective at return.
    double duality_gap = std::numeric_limits<double>::quiet_NaN();
};

/// log(p) / n, the fixed penalty used by the benchmark protocol.
double default_lambda(int p, int n);

} // namespace ggm
