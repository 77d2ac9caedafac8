#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ggm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Tolerance for reading the support of a constructed ground-truth matrix.
inline constexpr double kTruthZeroTol = 1e-12;

/// Tolerance for declaring an estimated coefficient zero.
inline constexpr double kEstimateZeroTol = 1e-8;

/// Raised when a method cannot be applied to the given data (e.g. the
/// empirical covariance is singular because p >= n).
class NotApplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ggm
