#pragma once

#include <array>

namespace ggm {

/// sign(z) * max(|z| - threshold, 0).
double soft_threshold(double z, double threshold);

/// Proximal map of sqrt(2) * lambda * ||.||_2 on a coefficient pair:
/// (1 - sqrt(2) * lambda / ||z||)_+ * z, and (0, 0) when z = 0.
/// Both components are zeroed together, which is what gives the symmetric
/// regression its symmetric zero pattern.
std::array<double, 2> multivariate_soft_threshold(std::array<double, 2> z, double lambda);

} // namespace ggm
