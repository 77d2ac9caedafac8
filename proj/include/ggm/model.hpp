#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <vector>

#include "ggm/types.hpp"

namespace ggm {

/// Unordered node pair, stored canonically with i < j. Indices are 0-based;
/// user-facing text formats print them 1-based.
struct Edge {
    int i;
    int j;

    auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph over p nodes.
class EdgeSet {
public:
    explicit EdgeSet(int p);

    /// Inserts {i, j} in either order. Self-loops and out-of-range nodes throw.
    void insert(int i, int j);
    bool contains(int i, int j) const;

    int nodes() const { return p_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::set<Edge>& edges() const { return edges_; }

    std::vector<int> neighbors(int node) const;

    /// Number of unordered pairs p(p-1)/2.
    std::size_t pair_count() const;

    bool operator==(const EdgeSet&) const = default;

private:
    static Edge canonical(int i, int j);

    int p_;
    std::set<Edge> edges_;
};

/// Symmetric positive-definite ground-truth precision matrix (inverse
/// covariance). Construction validates exact symmetry, a positive diagonal and
/// a successful Cholesky factorization.
class PrecisionMatrix {
public:
    explicit PrecisionMatrix(Matrix theta);

    int dim() const { return static_cast<int>(theta_.rows()); }
    const Matrix& matrix() const { return theta_; }
    double operator()(int i, int j) const { return theta_(i, j); }

private:
    Matrix theta_;
};

/// Tridiagonal chain: unit diagonal, weight w on the first off-diagonals.
PrecisionMatrix chain_graph(int p, double w);

/// rows x cols 4-neighbour lattice, row-major node numbering, unit diagonal,
/// weight w on lattice edges. The weight must keep the matrix strictly
/// diagonally dominant: |w| * max_degree < 1.
PrecisionMatrix grid_graph(int rows, int cols, double w);

/// Star with hub node 0: unit diagonal, weight w between the hub and every
/// other node. Requires |w| * sqrt(p - 1) < 1.
PrecisionMatrix star_graph(int p, double w);

/// Support of the off-diagonal part: {i, j} is an edge iff |theta_ij| > zero_tol.
EdgeSet edge_set(const PrecisionMatrix& theta, double zero_tol = kTruthZeroTol);

} // namespace ggm
