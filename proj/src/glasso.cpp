#include "ggm/glasso.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "ggm/lasso_cd.hpp"

namespace ggm {

namespace {

std::vector<int> others(int p, int j) {
    std::vector<int> idx;
    idx.reserve(p - 1);
    for (int k = 0; k < p; ++k) {
        if (k != j) idx.push_back(k);
    }
    return idx;
}

Matrix initial_covariance(const Matrix& s, double lambda) {
    if (lambda == 0.0) {
        Eigen::LLT<Matrix> llt(s);
        if (llt.info() != Eigen::Success) {
            throw std::invalid_argument("glasso_fit: lambda = 0 requires a positive definite covariance");
        }
        return s;
    }
    Matrix off = s;
    off.diagonal().setZero();
    const double largest = off.cwiseAbs().maxCoeff();
    const double t = largest > 0.0 ? std::min(1.0, lambda / largest) : 1.0;
    Matrix w = (1.0 - t) * s;
    w.diagonal() = s.diagonal();
    return w;
}

// Theta from the covariance estimate and the column regression coefficients.
Matrix recover_precision(const Matrix& w, const Matrix& betas) {
    const int p = static_cast<int>(w.rows());
    Matrix theta = Matrix::Zero(p, p);
    for (int j = 0; j < p; ++j) {
        double explained = 0.0;
        for (int k = 0; k < p; ++k) {
            if (k != j) explained += w(k, j) * betas(k, j);
        }
        const double diag = 1.0 / (w(j, j) - explained);
        theta(j, j) = diag;
        for (int k = 0; k < p; ++k) {
            if (k != j) theta(k, j) = -betas(k, j) * diag;
        }
    }
    return (theta + theta.transpose()) / 2.0;
}

double log_det_pd(const Matrix& m) {
    Eigen::LLT<Matrix> llt(m);
    if (llt.info() != Eigen::Success) return std::numeric_limits<double>::quiet_NaN();
    const Matrix& l = llt.matrixLLT();
    return 2.0 * l.diagonal().array().log().sum();
}

double offdiag_l1(const Matrix& m) {
    return m.lpNorm<1>() - m.diagonal().lpNorm<1>();
}

} // namespace

double glasso_objective(const CovarianceEstimate& s, const Matrix& theta, double lambda) {
    const double log_det = log_det_pd(theta);
    if (std::isnan(log_det)) return std::numeric_limits<double>::infinity();
    return -log_det + (s.matrix().cwiseProduct(theta)).sum() + lambda * offdiag_l1(theta);
}

GlassoFit glasso_fit(const CovarianceEstimate& s, const SolverConfig& cfg) {
    cfg.validate();
    const Matrix& sm = s.matrix();
    const int p = s.dim();
    if (!(sm.diagonal().minCoeff() > 0.0)) {
        throw std::invalid_argument("glasso_fit: covariance needs a positive diagonal");
    }
    const auto start = std::chrono::steady_clock::now();
    const double inner_tol = cfg.tol / 10.0;

    Matrix w = initial_covariance(sm, cfg.lambda);
    Matrix betas = Matrix::Zero(p, p);
    Matrix theta = recover_precision(w, betas);

    SolverReport report;
    if (cfg.record_trace) report.objective_trace.push_back(glasso_objective(s, theta, cfg.lambda));

    while (p > 1 && report.iterations < cfg.max_iter) {
        for (int j = 0; j < p; ++j) {
            const auto idx = others(p, j);
            Matrix w11(p - 1, p - 1);
            Vector s12(p - 1);
            Vector beta0(p - 1);
            for (int r = 0; r < p - 1; ++r) {
                s12[r] = sm(idx[r], j);
                beta0[r] = betas(idx[r], j);
                for (int c = 0; c < p - 1; ++c) w11(r, c) = w(idx[r], idx[c]);
            }
            LassoCD column(std::move(w11), std::move(s12), cfg.lambda, std::move(beta0));
            column.solve(inner_tol, cfg.max_iter);
            const Vector& w12 = column.gradient_cache();
            for (int r = 0; r < p - 1; ++r) {
                w(idx[r], j) = w12[r];
                w(j, idx[r]) = w12[r];
                betas(idx[r], j) = column.beta()[r];
            }
        }
        ++report.iterations;
        Matrix next = recover_precision(w, betas);
        report.final_delta = (next - theta).norm();
        theta = std::move(next);
        if (cfg.record_trace) report.objective_trace.push_back(glasso_objective(s, theta, cfg.lambda));
        if (report.final_delta <= cfg.tol) {
            report.converged = true;
            break;
        }
    }
    if (p == 1) {
        report.converged = true;
        report.final_delta = 0.0;
    }

    // Column recovery is only guaranteed PD at a fixed point; fall back to the
    // inverse of the (always PD) covariance estimate otherwise.
    if (Eigen::LLT<Matrix>(theta).info() != Eigen::Success) {
        Matrix inv = w.llt().solve(Matrix::Identity(p, p));
        theta = (inv + inv.transpose()) / 2.0;
    }

    report.objective = glasso_objective(s, theta, cfg.lambda);
    const double dual = log_det_pd(w) + p;
    report.duality_gap = report.objective - dual;
    report.runtime = std::chrono::steady_clock::now() - start;
    return {PrecisionMatrix(std::move(theta)), std::move(w), std::move(report)};
}

double glasso_kkt_residual(const CovarianceEstimate& s, const Matrix& theta, double lambda) {
    const int p = s.dim();
    const Matrix inv = theta.llt().solve(Matrix::Identity(p, p));
    const Matrix& sm = s.matrix();
    double worst = 0.0;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const double gap = inv(i, j) - sm(i, j);
            double violation = 0.0;
            if (i == j) {
                violation = std::abs(gap);
            } else if (theta(i, j) != 0.0) {
                violation = std::abs(gap - lambda * (theta(i, j) > 0.0 ? 1.0 : -1.0));
            } else {
                violation = std::max(0.0, std::abs(gap) - lambda);
            }
            worst = std::max(worst, violation);
        }
    }
    return worst;
}

} // namespace ggm
