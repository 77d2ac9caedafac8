#pragma once

#include <filesystem>
#include <iosfwd>

#include "ggm/model.hpp"
#include "ggm/types.hpp"

namespace ggm {

/// p x p regression coefficient matrix with an exactly zero diagonal.
/// Column j holds the coefficients of the regression of variable j on the
/// others, B_ij = -Theta_ij / Theta_jj in the population.
class CoefficientMatrix {
public:
    explicit CoefficientMatrix(int p);
    explicit CoefficientMatrix(Matrix b);

    int dim() const { return static_cast<int>(b_.rows()); }
    const Matrix& matrix() const { return b_; }
    double operator()(int i, int j) const { return b_(i, j); }

private:
    Matrix b_;
};

enum class EdgeRule { either, both };

/// OR rule (`either`): {i, j} is an edge when |B_ij| or |B_ji| exceeds
/// zero_tol. AND rule (`both`): both must.
EdgeSet edges_from_coefficients(const CoefficientMatrix& b, EdgeRule rule,
                                double zero_tol = kEstimateZeroTol);

/// Edge-list text: one "i j" line per edge, 1-based, i < j, ascending.
void write_edge_list(std::ostream& out, const EdgeSet& edges);
void write_edge_list(const std::filesystem::path& path, const EdgeSet& edges);
EdgeSet read_edge_list(std::istream& in, int p);

} // namespace ggm
