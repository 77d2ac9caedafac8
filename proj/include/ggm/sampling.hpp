#pragma once

#include <cstdint>
#include <filesystem>
#include <random>

#include "ggm/model.hpp"
#include "ggm/types.hpp"

namespace ggm {

/// n x p sample matrix, one observation per row.
///
/// When `standardized` is set every column has zero mean and
/// (1/n) * sum of squares equal to one (divisor n, not n - 1). The
/// constructor verifies this to 1e-10 when the flag is passed in.
class DataMatrix {
public:
    explicit DataMatrix(Matrix values, bool standardized = false);

    int n() const { return static_cast<int>(values_.rows()); }
    int p() const { return static_cast<int>(values_.cols()); }
    const Matrix& values() const { return values_; }
    bool standardized() const { return standardized_; }

private:
    Matrix values_;
    bool standardized_;
};

/// Symmetric p x p second-moment matrix X^t X / n.
class CovarianceEstimate {
public:
    explicit CovarianceEstimate(Matrix sigma_hat);

    int dim() const { return static_cast<int>(sigma_.rows()); }
    const Matrix& matrix() const { return sigma_; }

private:
    Matrix sigma_;
};

/// Portable seeded N(0, 1) stream: mt19937_64 drives a Box-Muller transform
/// on 53-bit uniforms, so a seed yields the same variates on every platform.
class NormalRng {
public:
    explicit NormalRng(std::uint64_t seed) : engine_(seed) {}

    double operator()();

private:
    double uniform_open_closed();

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Sigma = Theta^{-1}, computed through the Cholesky factor of Theta and
/// symmetrized.
Matrix covariance_from_precision(const PrecisionMatrix& theta);

/// n i.i.d. rows from N(0, sigma) as Z * L^t, where sigma = L * L^t and Z is
/// filled row by row from NormalRng(seed).
DataMatrix sample_gaussian(const Matrix& sigma, int n, std::uint64_t seed);

/// Centers each column and scales it to (1/n) * ||x_j||^2 = 1. Throws
/// std::invalid_argument naming the first constant column.
DataMatrix standardize(const DataMatrix& x);

/// X^t X / n. For standardized input the diagonal is exactly one.
CovarianceEstimate empirical_covariance(const DataMatrix& x);

/// Plain numeric CSV, one sample per row, no header.
DataMatrix read_data_csv(const std::filesystem::path& path);
void write_data_csv(const std::filesystem::path& path, const DataMatrix& x);

} // namespace ggm
