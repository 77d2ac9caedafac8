#include "ggm/spr.hpp"

#include <cmath>
#include <numbers>

#include "ggm/soft_threshold.hpp"

namespace ggm {

namespace {

void check_inputs(const DataMatrix& x, const SolverConfig& cfg) {
    cfg.validate();
    if (!x.standardized()) {
        throw std::invalid_argument("spr_fit: data matrix must be standardized");
    }
    if (x.p() < 2) {
        throw std::invalid_argument("spr_fit: need at least two variables");
    }
}

double group_penalty(const Matrix& b, double lambda) {
    double sum = 0.0;
    for (Eigen::Index a = 0; a < b.rows(); ++a) {
        for (Eigen::Index c = a + 1; c < b.cols(); ++c) sum += std::hypot(b(a, c), b(c, a));
    }
    return std::numbers::sqrt2 * lambda * sum;
}

} // namespace

double spr_objective(const DataMatrix& x, const CoefficientMatrix& b, double lambda) {
    const Matrix& v = x.values();
    const double loss = (v - v * b.matrix()).squaredNorm() / (2.0 * x.n());
    return loss + group_penalty(b.matrix(), lambda);
}

CoefficientFit spr_fit(const DataMatrix& x, const SolverConfig& cfg) {
    return spr_fit(x, cfg, CoefficientMatrix(x.p()));
}

CoefficientFit spr_fit(const DataMatrix& x, const SolverConfig& cfg, const CoefficientMatrix& warm_start) {
    check_inputs(x, cfg);
    if (warm_start.dim() != x.p()) {
        throw std::invalid_argument("spr_fit: warm start has the wrong dimension");
    }
    const auto start = std::chrono::steady_clock::now();

    const Matrix& v = x.values();
    const int p = x.p();
    const double inv_n = 1.0 / x.n();
    Matrix gram = v.transpose() * v * inv_n;
    gram = (gram + gram.transpose()) / 2.0;
    Matrix b = warm_start.matrix();
    // Residual correlations: corr(a, c) = X_a^t R_c / n with R = X - X B.
    // Moving B_ac by d shifts R_c by -d X_a, hence corr(:, c) by -d gram(:, a).
    Matrix corr = gram - gram * b;

    SolverReport report;
    if (cfg.record_trace) report.objective_trace.push_back(spr_objective(x, CoefficientMatrix(b), cfg.lambda));

    while (report.iterations < cfg.max_iter) {
        double change_sq = 0.0;
        for (int a = 0; a < p; ++a) {
            for (int c = a + 1; c < p; ++c) {
                const double old_ac = b(a, c);
                const double old_ca = b(c, a);
                const auto updated = multivariate_soft_threshold({corr(a, c) + old_ac, corr(c, a) + old_ca}, cfg.lambda);
                const double d_ac = updated[0] - old_ac;
                const double d_ca = updated[1] - old_ca;
                if (d_ac != 0.0) {
                    b(a, c) = updated[0];
                    corr.col(c).noalias() -= d_ac * gram.col(a);
                }
                if (d_ca != 0.0) {
                    b(c, a) = updated[1];
                    corr.col(a).noalias() -= d_ca * gram.col(c);
                }
                change_sq += d_ac * d_ac + d_ca * d_ca;
            }
        }
        ++report.iterations;
        report.final_delta = std::sqrt(change_sq);
        if (cfg.record_trace) report.objective_trace.push_back(spr_objective(x, CoefficientMatrix(b), cfg.lambda));
        if (report.final_delta <= cfg.tol) {
            report.converged = true;
            break;
        }
    }

    CoefficientMatrix out(std::move(b));
    report.objective = spr_objective(x, out, cfg.lambda);
    report.runtime = std::chrono::steady_clock::now() - start;
    return {std::move(out), std::move(report)};
}

double spr_kkt_residual(const DataMatrix& x, const CoefficientMatrix& b, double lambda) {
    const Matrix& v = x.values();
    const Matrix& coef = b.matrix();
    const Matrix resid = v - v * coef;
    // corr(a, c) = X_a^t R_c / n: minus the loss gradient wrt B_ac.
    const Matrix corr = v.transpose() * resid / static_cast<double>(x.n());
    const double threshold = std::numbers::sqrt2 * lambda;
    double worst = 0.0;
    for (Eigen::Index a = 0; a < coef.rows(); ++a) {
        for (Eigen::Index c = a + 1; c < coef.cols(); ++c) {
            const double norm = std::hypot(coef(a, c), coef(c, a));
            double violation = 0.0;
            if (norm != 0.0) {
                const double g_ac = -corr(a, c) + threshold * coef(a, c) / norm;
                const double g_ca = -corr(c, a) + threshold * coef(c, a) / norm;
                violation = std::hypot(g_ac, g_ca);
            } else {
                violation = std::max(0.0, std::hypot(corr(a, c), corr(c, a)) - threshold);
            }
            worst = std::max(worst, violation);
        }
    }
    return worst;
}

double spr_null_lambda(const DataMatrix& x) {
    const Matrix& v = x.values();
    const Matrix gram = v.transpose() * v / static_cast<double>(x.n());
    double worst = 0.0;
    for (Eigen::Index a = 0; a < gram.rows(); ++a) {
        for (Eigen::Index c = a + 1; c < gram.cols(); ++c) {
            worst = std::max(worst, std::hypot(gram(a, c), gram(c, a)));
        }
    }
    return worst / std::numbers::sqrt2;
}

} // namespace ggm
