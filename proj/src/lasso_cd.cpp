#include "ggm/lasso_cd.hpp"

#include <cmath>

#include "ggm/soft_threshold.hpp"

namespace ggm {

LassoCD::LassoCD(Matrix q, Vector c, double lambda)
    : LassoCD(std::move(q), c, lambda, Vector::Zero(c.size())) {}

LassoCD::LassoCD(Matrix q, Vector c, double lambda, Vector beta0)
    : q_(std::move(q)), c_(std::move(c)), lambda_(lambda), beta_(std::move(beta0)) {
    if (q_.rows() != q_.cols() || q_.rows() != c_.size() || beta_.size() != c_.size()) {
        throw std::invalid_argument("LassoCD: inconsistent dimensions");
    }
    if (lambda_ < 0.0) {
        throw std::invalid_argument("LassoCD: negative penalty");
    }
    if (q_.rows() > 0 && !(q_.diagonal().minCoeff() > 0.0)) {
        throw std::invalid_argument("LassoCD: quadratic form needs a positive diagonal");
    }
    q_beta_ = q_ * beta_;
}

double LassoCD::sweep() {
    double change_sq = 0.0;
    for (Eigen::Index k = 0; k < beta_.size(); ++k) {
        const double qkk = q_(k, k);
        const double old = beta_[k];
        // Partial residual correlation with coordinate k removed from the fit.
        const double rho = c_[k] - q_beta_[k] + qkk * old;
        const double updated = soft_threshold(rho, lambda_) / qkk;
        const double delta = updated - old;
        if (delta != 0.0) {
            beta_[k] = updated;
            q_beta_.noalias() += delta * q_.col(k);
            change_sq += delta * delta;
        }
    }
    return std::sqrt(change_sq);
}

LassoCD::Outcome LassoCD::solve(double tol, int max_sweeps) {
    Outcome out;
    while (out.sweeps < max_sweeps) {
        out.final_delta = sweep();
        ++out.sweeps;
        if (out.final_delta <= tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

double LassoCD::objective() const {
    return 0.5 * beta_.dot(q_beta_) - c_.dot(beta_) + lambda_ * beta_.lpNorm<1>();
}

} // namespace ggm
