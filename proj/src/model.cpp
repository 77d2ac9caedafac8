#include "ggm/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ggm {

EdgeSet::EdgeSet(int p) : p_(p) {
    if (p < 1) {
        throw std::invalid_argument("EdgeSet: node count must be positive, got " + std::to_string(p));
    }
}

Edge EdgeSet::canonical(int i, int j) {
    return i < j ? Edge{i, j} : Edge{j, i};
}

void EdgeSet::insert(int i, int j) {
    if (i == j) {
        throw std::invalid_argument("EdgeSet: self-loop on node " + std::to_string(i + 1));
    }
    if (i < 0 || j < 0 || i >= p_ || j >= p_) {
        throw std::out_of_range("EdgeSet: node index out of range");
    }
    edges_.insert(canonical(i, j));
}

bool EdgeSet::contains(int i, int j) const {
    if (i == j) return false;
    return edges_.contains(canonical(i, j));
}

std::vector<int> EdgeSet::neighbors(int node) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
        if (e.i == node) out.push_back(e.j);
        else if (e.j == node) out.push_back(e.i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t EdgeSet::pair_count() const {
    const auto p = static_cast<std::size_t>(p_);
    return p * (p - 1) / 2;
}

PrecisionMatrix::PrecisionMatrix(Matrix theta) : theta_(std::move(theta)) {
    if (theta_.rows() == 0 || theta_.rows() != theta_.cols()) {
        throw std::invalid_argument("PrecisionMatrix: matrix must be square and non-empty");
    }
    const Eigen::Index p = theta_.rows();
    for (Eigen::Index i = 0; i < p; ++i) {
        if (!(theta_(i, i) > 0.0)) {
            throw std::invalid_argument("PrecisionMatrix: non-positive diagonal entry at " + std::to_string(i + 1));
        }
        for (Eigen::Index j = i + 1; j < p; ++j) {
            if (theta_(i, j) != theta_(j, i)) {
                throw std::invalid_argument("PrecisionMatrix: matrix is not symmetric");
            }
        }
    }
    Eigen::LLT<Matrix> llt(theta_);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("PrecisionMatrix: matrix is not positive definite");
    }
}

PrecisionMatrix chain_graph(int p, double w) {
    if (p < 2) {
        throw std::invalid_argument("chain_graph: need p >= 2, got " + std::to_string(p));
    }
    Matrix theta = Matrix::Identity(p, p);
    for (int i = 1; i < p; ++i) {
        theta(i - 1, i) = w;
        theta(i, i - 1) = w;
    }
    return PrecisionMatrix(std::move(theta));
}

PrecisionMatrix grid_graph(int rows, int cols, double w) {
    if (rows < 1 || cols < 1 || rows * cols < 2) {
        throw std::invalid_argument("grid_graph: lattice must have at least two nodes");
    }
    const int max_degree = (rows > 2 ? 2 : rows - 1) + (cols > 2 ? 2 : cols - 1);
    if (!(std::abs(w) * max_degree < 1.0)) {
        throw std::invalid_argument("grid_graph: weight " + std::to_string(w)
                                    + " breaks strict diagonal dominance");
    }
    const int p = rows * cols;
    Matrix theta = Matrix::Identity(p, p);
    auto node = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                theta(node(r, c), node(r, c + 1)) = w;
                theta(node(r, c + 1), node(r, c)) = w;
            }
            if (r + 1 < rows) {
                theta(node(r, c), node(r + 1, c)) = w;
                theta(node(r + 1, c), node(r, c)) = w;
            }
        }
    }
    return PrecisionMatrix(std::move(theta));
}

PrecisionMatrix star_graph(int p, double w) {
    if (p < 2) {
        throw std::invalid_argument("star_graph: need p >= 2, got " + std::to_string(p));
    }
    if (!(std::abs(w) * std::sqrt(static_cast<double>(p - 1)) < 1.0)) {
        throw std::invalid_argument("star_graph: |w| * sqrt(p - 1) must be < 1");
    }
    Matrix theta = Matrix::Identity(p, p);
    for (int j = 1; j < p; ++j) {
        theta(0, j) = w;
        theta(j, 0) = w;
    }
    return PrecisionMatrix(std::move(theta));
}

EdgeSet edge_set(const PrecisionMatrix& theta, double zero_tol) {
    const int p = theta.dim();
    EdgeSet edges(p);
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            if (std::abs(theta(i, j)) > zero_tol) edges.insert(i, j);
        }
    }
    return edges;
}

} // namespace ggm
