#include "ggm/soft_threshold.hpp"

#include <cmath>
#include <numbers>

namespace ggm {

double soft_threshold(double z, double threshold) {
    if (z > threshold) return z - threshold;
    if (z < -threshold) return z + threshold;
    return 0.0;
}

std::array<double, 2> multivariate_soft_threshold(std::array<double, 2> z, double lambda) {
    const double norm = std::sqrt(z[0] * z[0] + z[1] * z[1]);
    const double threshold = std::numbers::sqrt2 * lambda;
    if (norm <= threshold || norm == 0.0) return {0.0, 0.0};
    const double shrink = 1.0 - threshold / norm;
    return {shrink * z[0], shrink * z[1]};
}

} // namespace ggm
