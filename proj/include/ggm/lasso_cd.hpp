#pragma once

#include "ggm/types.hpp"

namespace ggm {

/// Cyclic coordinate descent for the quadratic-form lasso
///
///     minimize  1/2 beta^t Q beta - c^t beta + lambda * ||beta||_1
///
/// with Q symmetric PSD and a strictly positive diagonal. The gradient cache
/// Q * beta is updated incrementally after every coordinate move, so a sweep
/// costs O(k^2) for k coordinates.
///
/// Regressing column j of a standardized data matrix on the others is the
/// case Q = X_{-j}^t X_{-j} / n, c = X_{-j}^t X_j / n; the glasso column
/// subproblem is Q = W_11, c = s_12.
class LassoCD {
public:
    LassoCD(Matrix q, Vector c, double lambda);
    LassoCD(Matrix q, Vector c, double lambda, Vector beta0);

    /// One pass over all coordinates in index order. Returns the Euclidean
    /// norm of the change in beta.
    double sweep();

    struct Outcome {
        int sweeps = 0;
        bool converged = false;
        double final_delta = 0.0;
    };

    /// Sweeps until the change drops to tol or max_sweeps is reached.
    Outcome solve(double tol, int max_sweeps);

    const Vector& beta() const { return beta_; }
    /// Q * beta.
    const Vector& gradient_cache() const { return q_beta_; }
    double objective() const;

private:
    Matrix q_;
    Vector c_;
    double lambda_;
    Vector beta_;
    Vector q_beta_;
};

} // namespace ggm
