#include "ggm/solver_config.hpp"

#include <cmath>
#include <stdexcept>

namespace ggm {

void SolverConfig::validate() const {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("SolverConfig: lambda must be finite and >= 0");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("SolverConfig: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("SolverConfig: alpha must be in (0, 1)");
}

double default_lambda(int p, int n) {
    if (p < 2 || n < 1) throw std::invalid_argument("default_lambda: need p >= 2 and n >= 1");
    return std::log(static_cast<double>(p)) / static_cast<double>(n);
}

} // namespace ggm
