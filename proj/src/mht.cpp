#include "ggm/mht.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/beta.hpp>

namespace ggm {

double student_two_sided_p(double t, int df) {
    if (df < 1) throw std::invalid_argument("student_two_sided_p: df must be positive");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(t)) return 0.0;
    if (t == 0.0) return 1.0;
    const double nu = df;
    return boost::math::ibeta(nu / 2.0, 0.5, nu / (nu + t * t));
}

PartialCorrelationTest partial_correlation_test(double rho_hat, int df) {
    if (df < 1) throw std::invalid_argument("partial_correlation_test: df must be positive");
    if (!(rho_hat >= -1.0 && rho_hat <= 1.0)) {
        throw std::invalid_argument("partial_correlation_test: correlation outside [-1, 1]");
    }
    PartialCorrelationTest out;
    out.rho_hat = rho_hat;
    out.df = df;
    if (rho_hat == 0.0) return out;
    if (std::abs(rho_hat) == 1.0) {
        out.t_stat = std::copysign(std::numeric_limits<double>::infinity(), rho_hat);
        out.p_value = 0.0;
        return out;
    }
    out.t_stat = std::sqrt(static_cast<double>(df)) * rho_hat / std::sqrt(1.0 - rho_hat * rho_hat);
    out.p_value = student_two_sided_p(out.t_stat, df);
    return out;
}

MhtFit mht_fit(const DataMatrix& x, const SolverConfig& cfg) {
    cfg.validate();
    if (!x.standardized()) {
        throw std::invalid_argument("mht_fit: data matrix must be standardized");
    }
    const int n = x.n();
    const int p = x.p();
    if (n <= p + 2) {
        throw NotApplicable("mht_fit: need n > p + 2 (n = " + std::to_string(n) + ", p = " + std::to_string(p) + ")");
    }
    const CovarianceEstimate s = empirical_covariance(x);
    Eigen::LLT<Matrix> llt(s.matrix());
    if (llt.info() != Eigen::Success) {
        throw NotApplicable("mht_fit: empirical covariance is singular");
    }
    const Matrix k = llt.solve(Matrix::Identity(p, p));

    const double pairs = 0.5 * p * (p - 1);
    MhtFit out{EdgeSet(p), Matrix::Zero(p, p), Matrix::Ones(p, p), n - p - 2,
               cfg.correction == Correction::bonferroni ? cfg.alpha / pairs : cfg.alpha};
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            double rho = -0.5 * (k(i, j) + k(j, i)) / std::sqrt(k(i, i) * k(j, j));
            rho = std::clamp(rho, -1.0, 1.0);
            const auto test = partial_correlation_test(rho, out.df);
            out.partial_correlation(i, j) = out.partial_correlation(j, i) = rho;
            out.p_values(i, j) = out.p_values(j, i) = test.p_value;
            if (test.p_value < out.level) out.edges.insert(i, j);
        }
    }
    return out;
}

} // namespace ggm
