#include "ggm/parallel_regression.hpp"

#include <cmath>
#include <vector>

#include "ggm/lasso_cd.hpp"

namespace ggm {

namespace {

void check_inputs(const DataMatrix& x, const SolverConfig& cfg) {
    cfg.validate();
    if (!x.standardized()) {
        throw std::invalid_argument("pr_fit: data matrix must be standardized");
    }
    if (x.p() < 2) {
        throw std::invalid_argument("pr_fit: need at least two variables");
    }
}

Matrix gram_matrix(const DataMatrix& x) {
    const Matrix& v = x.values();
    Matrix g = v.transpose() * v / static_cast<double>(x.n());
    return (g + g.transpose()) / 2.0;
}

std::vector<int> others(int p, int j) {
    std::vector<int> idx;
    idx.reserve(p - 1);
    for (int k = 0; k < p; ++k) {
        if (k != j) idx.push_back(k);
    }
    return idx;
}

LassoCD column_problem(const Matrix& gram, int j, double lambda, const Vector& start_column) {
    const int p = static_cast<int>(gram.rows());
    const auto idx = others(p, j);
    Matrix q(p - 1, p - 1);
    Vector c(p - 1);
    Vector beta0(p - 1);
    for (int r = 0; r < p - 1; ++r) {
        c[r] = gram(idx[r], j);
        beta0[r] = start_column[idx[r]];
        for (int s = 0; s < p - 1; ++s) q(r, s) = gram(idx[r], idx[s]);
    }
    return LassoCD(std::move(q), std::move(c), lambda, std::move(beta0));
}

void scatter_column(Matrix& b, int j, const Vector& beta) {
    const int p = static_cast<int>(b.rows());
    int r = 0;
    for (int k = 0; k < p; ++k) {
        if (k != j) b(k, j) = beta[r++];
    }
}

} // namespace

double pr_objective(const DataMatrix& x, const CoefficientMatrix& b, double lambda) {
    const Matrix& v = x.values();
    const double loss = (v - v * b.matrix()).squaredNorm() / (2.0 * x.n());
    return loss + lambda * b.matrix().lpNorm<1>();
}

CoefficientFit pr_fit(const DataMatrix& x, const SolverConfig& cfg) {
    return pr_fit(x, cfg, CoefficientMatrix(x.p()));
}

CoefficientFit pr_fit(const DataMatrix& x, const SolverConfig& cfg, const CoefficientMatrix& warm_start) {
    check_inputs(x, cfg);
    if (warm_start.dim() != x.p()) {
        throw std::invalid_argument("pr_fit: warm start has the wrong dimension");
    }
    const auto start = std::chrono::steady_clock::now();
    const int p = x.p();
    const Matrix gram = gram_matrix(x);

    std::vector<LassoCD> columns;
    columns.reserve(p);
    for (int j = 0; j < p; ++j) columns.push_back(column_problem(gram, j, cfg.lambda, warm_start.matrix().col(j)));
    std::vector<bool> done(p, false);

    Matrix b = warm_start.matrix();
    SolverReport report;
    if (cfg.record_trace) report.objective_trace.push_back(pr_objective(x, CoefficientMatrix(b), cfg.lambda));

    int remaining = p;
    while (remaining > 0 && report.iterations < cfg.max_iter) {
        double worst = 0.0;
        for (int j = 0; j < p; ++j) {
            if (done[j]) continue;
            const double delta = columns[j].sweep();
            scatter_column(b, j, columns[j].beta());
            worst = std::max(worst, delta);
            if (delta <= cfg.tol) {
                done[j] = true;
                --remaining;
            }
        }
        ++report.iterations;
        report.final_delta = worst;
        if (cfg.record_trace) report.objective_trace.push_back(pr_objective(x, CoefficientMatrix(b), cfg.lambda));
    }
    report.converged = remaining == 0;

    CoefficientMatrix out(std::move(b));
    report.objective = pr_objective(x, out, cfg.lambda);
    report.runtime = std::chrono::steady_clock::now() - start;
    return {std::move(out), std::move(report)};
}

Vector pr_fit_column(const DataMatrix& x, int j, const SolverConfig& cfg) {
    check_inputs(x, cfg);
    if (j < 0 || j >= x.p()) throw std::out_of_range("pr_fit_column: column index out of range");
    const Matrix gram = gram_matrix(x);
    auto problem = column_problem(gram, j, cfg.lambda, Vector::Zero(x.p()));
    problem.solve(cfg.tol, cfg.max_iter);
    Matrix holder = Matrix::Zero(x.p(), x.p());
    scatter_column(holder, j, problem.beta());
    return holder.col(j);
}

double pr_kkt_residual(const DataMatrix& x, const CoefficientMatrix& b, double lambda) {
    const Matrix& v = x.values();
    const Matrix& coef = b.matrix();
    const Matrix corr = v.transpose() * (v - v * coef) / static_cast<double>(x.n());
    double worst = 0.0;
    for (Eigen::Index j = 0; j < coef.cols(); ++j) {
        for (Eigen::Index k = 0; k < coef.rows(); ++k) {
            if (k == j) continue;
            const double g = -corr(k, j);
            const double violation = coef(k, j) != 0.0
                ? std::abs(g + lambda * (coef(k, j) > 0.0 ? 1.0 : -1.0))
                : std::max(0.0, std::abs(g) - lambda);
            worst = std::max(worst, violation);
        }
    }
    return worst;
}

double pr_null_lambda(const DataMatrix& x) {
    Matrix g = gram_matrix(x);
    g.diagonal().setZero();
    return g.cwiseAbs().maxCoeff();
}

} // namespace ggm
