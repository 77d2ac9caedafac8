#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ggm/coefficients.hpp"
#include "ggm/spr.hpp"
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

bool symmetric_zero_pattern(const Matrix& b) {
    for (int a = 0; a < b.rows(); ++a) {
        for (int c = a + 1; c < b.cols(); ++c) {
            if ((b(a, c) == 0.0) != (b(c, a) == 0.0)) return false;
        }
    }
    return true;
}

} // namespace

TEST(SprFit, AboveNullLambdaGivesZero) {
    const auto x = standardized_sample(20, 5, 3);
    const double bound = spr_null_lambda(x);
    // Independent evaluation of the bound from raw correlations.
    const Matrix g = x.values().transpose() * x.values() / 20.0;
    double expected = 0.0;
    for (int a = 0; a < 5; ++a) {
        for (int c = a + 1; c < 5; ++c) expected = std::max(expected, std::sqrt(2.0) * std::abs(g(a, c)));
    }
    EXPECT_NEAR(bound, expected / std::sqrt(2.0), 1e-14);

    SolverConfig cfg;
    cfg.lambda = bound * (1.0 + 1e-9);
    const auto fit = spr_fit(x, cfg);
    EXPECT_EQ(fit.b.matrix(), Matrix::Zero(5, 5));
    EXPECT_EQ(fit.report.iterations, 1);
    EXPECT_TRUE(fit.report.converged);
    EXPECT_EQ(spr_kkt_residual(x, fit.b, cfg.lambda), 0.0);
}

TEST(SprFit, ZeroPenaltyIsLeastSquares) {
    const auto x = standardized_sample(40, 5, 8);
    const auto fit = spr_fit(x, tight(0.0));
    EXPECT_TRUE(fit.report.converged);
    const Matrix ls = oracle::least_squares_coefficients(x.values());
    EXPECT_LE((fit.b.matrix() - ls).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(SprFit, MatchesConvexOracle) {
    const auto x = standardized_sample(20, 4, 17);
    const auto fit = spr_fit(x, tight(0.1));
    const Matrix ref = oracle::fista_spr(x.values(), 0.1);
    EXPECT_NEAR(fit.report.objective, oracle::spr_criterion(x.values(), ref, 0.1), 1e-8);
    EXPECT_NEAR(fit.report.objective, oracle::spr_criterion(x.values(), fit.b.matrix(), 0.1), 1e-12);
    EXPECT_LE(spr_kkt_residual(x, fit.b, 0.1), 1e-6);
    EXPECT_LE(spr_kkt_residual(x, CoefficientMatrix(ref), 0.1), 1e-6);
}

TEST(SprFit, SymmetricZeroPatternAndEdgeRules) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto x = standardized_sample(12, 8, seed);
        SolverConfig cfg;
        cfg.lambda = 0.15;
        const auto fit = spr_fit(x, cfg);
        EXPECT_TRUE(symmetric_zero_pattern(fit.b.matrix()));
        EXPECT_EQ(edges_from_coefficients(fit.b, EdgeRule::either), edges_from_coefficients(fit.b, EdgeRule::both));
    }
}

TEST(SprFit, ObjectiveNonIncreasingPerSweep) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto x = standardized_sample(16, 10, seed);
        SolverConfig cfg = tight(0.05 * static_cast<double>(seed));
        cfg.record_trace = true;
        const auto fit = spr_fit(x, cfg);
        ASSERT_EQ(fit.report.objective_trace.size(), static_cast<std::size_t>(fit.report.iterations) + 1);
        for (std::size_t k = 1; k < fit.report.objective_trace.size(); ++k) {
            EXPECT_LE(fit.report.objective_trace[k], fit.report.objective_trace[k - 1] + 1e-12);
        }
    }
}

TEST(SprFit, ConvergedKktWithinTenTol) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto x = standardized_sample(20, 6, seed);
        SolverConfig cfg;
        cfg.lambda = 0.1;
        const auto fit = spr_fit(x, cfg);
        ASSERT_TRUE(fit.report.converged);
        EXPECT_LE(fit.report.final_delta, cfg.tol);
        EXPECT_LE(spr_kkt_residual(x, fit.b, cfg.lambda), 10.0 * cfg.tol);
    }
}

TEST(SprFit, WarmStartReachesSameSolution) {
    const auto x = standardized_sample(20, 6, 4);
    const auto cold = spr_fit(x, tight(0.05));
    const auto path_start = spr_fit(x, tight(0.2));
    const auto warm = spr_fit(x, tight(0.05), path_start.b);
    EXPECT_LE((warm.b.matrix() - cold.b.matrix()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(SprFit, LargePenaltyShrinksToZero) {
    const auto x = standardized_sample(20, 6, 9);
    const double bound = spr_null_lambda(x);
    double previous = std::numeric_limits<double>::infinity();
    for (double scale : {0.5, 0.9, 1.0 + 1e-9, 2.0}) {
        const auto fit = spr_fit(x, tight(bound * scale));
        const double norm = fit.b.matrix().norm();
        if (scale > 1.0) EXPECT_EQ(norm, 0.0);
        EXPECT_LE(norm, previous + 1e-12);
        previous = norm;
    }
}

TEST(SprFit, RejectsInvalidInput) {
    const DataMatrix raw(oracle::Matrix::Random(10, 3));
    SolverConfig cfg;
    EXPECT_THROW(spr_fit(raw, cfg), std::invalid_argument);
    cfg.tol = -1.0;
    EXPECT_THROW(spr_fit(standardized_sample(10, 3, 1), cfg), std::invalid_argument);
    EXPECT_THROW(DataMatrix(Matrix::Constant(3, 2, std::nan(""))), std::invalid_argument);
}

TEST(SprKkt, PerturbationBreaksStationarity) {
    const auto x = standardized_sample(20, 5, 21);
    const auto fit = spr_fit(x, tight(0.05));
    ASSERT_LE(spr_kkt_residual(x, fit.b, 0.05), 1e-6);
    Matrix perturbed = fit.b.matrix();
    for (int a = 0; a < 5; ++a) {
        for (int c = 0; c < 5; ++c) {
            if (a != c && perturbed(a, c) != 0.0) {
                perturbed(a, c) += 0.1;
                EXPECT_GT(spr_kkt_residual(x, CoefficientMatrix(perturbed), 0.05), 1e-3);
                return;
            }
        }
    }
    FAIL() << "no active pair at this penalty";
}
