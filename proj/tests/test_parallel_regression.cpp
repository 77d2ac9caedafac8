#include <cmath>

#include <gtest/gtest.h>

#include "ggm/parallel_regression.hpp"
#include "oracles.hpp"

using namespace ggm;

namespace {

DataMatrix standardized_sample(int n, int p, std::uint64_t seed) {
    return DataMatrix(oracle::random_standardized(n, p, seed), true);
}

SolverConfig tight(double lambda) {
    SolverConfig cfg;
    cfg.lambda = lambda;
    cfg.tol = 1e-12;
    cfg.max_iter = 100000;
    return cfg;
}

} // namespace

TEST(PrFit, ZeroPenaltyIsLeastSquares) {
    const auto x = standardized_sample(40, 5, 12);
    const auto fit = pr_fit(x, tight(0.0));
    EXPECT_TRUE(fit.report.converged);
    EXPECT_LE((fit.b.matrix() - oracle::least_squares_coefficients(x.values())).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(PrFit, AboveNullLambdaGivesZero) {
    const auto x = standardized_sample(20, 6, 2);
    const Matrix g = x.values().transpose() * x.values() / 20.0;
    double expected = 0.0;
    for (int j = 0; j < 6; ++j) {
        for (int k = 0; k < 6; ++k) {
            if (j != k) expected = std::max(expected, std::abs(g(k, j)));
        }
    }
    EXPECT_NEAR(pr_null_lambda(x), expected, 1e-14);
    SolverConfig cfg;
    cfg.lambda = expected * (1.0 + 1e-9);
    const auto fit = pr_fit(x, cfg);
    EXPECT_EQ(fit.b.matrix(), Matrix::Zero(6, 6));
    EXPECT_EQ(fit.report.iterations, 1);
}

TEST(PrFit, ColumnsMatchReferenceLasso) {
    const auto x = standardized_sample(20, 4, 31);
    const auto fit = pr_fit(x, tight(0.1));
    for (int j = 0; j < 4; ++j) {
        const Vector ref = oracle::fista_lasso_column(x.values(), j, 0.1);
        EXPECT_NEAR(oracle::lasso_column_criterion(x.values(), j, fit.b.matrix().col(j), 0.1),
                    oracle::lasso_column_criterion(x.values(), j, ref, 0.1), 1e-8);
    }
    EXPECT_NEAR(fit.report.objective, oracle::pr_criterion(x.values(), fit.b.matrix(), 0.1), 1e-12);
}

TEST(PrFit, ColumnsAreSeparable) {
    const auto x = standardized_sample(15, 7, 5);
    SolverConfig cfg;
    cfg.lambda = 0.12;
    const auto fit = pr_fit(x, cfg);
    // Solving columns one at a time in reverse order gives the same matrix.
    Matrix assembled = Matrix::Zero(7, 7);
    for (int j = 6; j >= 0; --j) assembled.col(j) = pr_fit_column(x, j, cfg);
    EXPECT_EQ(assembled, fit.b.matrix());
}

TEST(PrFit, ObjectiveNonIncreasingPerSweep) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto x = standardized_sample(16, 10, seed);
        SolverConfig cfg = tight(0.03 * static_cast<double>(seed));
        cfg.record_trace = true;
        const auto fit = pr_fit(x, cfg);
        for (std::size_t k = 1; k < fit.report.objective_trace.size(); ++k) {
            EXPECT_LE(fit.report.objective_trace[k], fit.report.objective_trace[k - 1] + 1e-12);
        }
    }
}

TEST(PrFit, ConvergedKktWithinTenTol) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto x = standardized_sample(20, 6, seed);
        SolverConfig cfg;
        cfg.lambda = 0.1;
        const auto fit = pr_fit(x, cfg);
        ASSERT_TRUE(fit.report.converged);
        EXPECT_LE(fit.report.final_delta, cfg.tol);
        EXPECT_LE(pr_kkt_residual(x, fit.b, cfg.lambda), 10.0 * cfg.tol);
    }
}

TEST(PrFit, RejectsUnstandardized) {
    EXPECT_THROW(pr_fit(DataMatrix(oracle::Matrix::Random(10, 3)), SolverConfig{}), std::invalid_argument);
    EXPECT_THROW(pr_fit_column(standardized_sample(10, 3, 1), 3, SolverConfig{}), std::out_of_range);
}
