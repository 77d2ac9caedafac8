#include "ggm/coefficients.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace ggm {

CoefficientMatrix::CoefficientMatrix(int p) : b_(Matrix::Zero(p, p)) {
    if (p < 1) throw std::invalid_argument("CoefficientMatrix: dimension must be positive");
}

CoefficientMatrix::CoefficientMatrix(Matrix b) : b_(std::move(b)) {
    if (b_.rows() == 0 || b_.rows() != b_.cols()) {
        throw std::invalid_argument("CoefficientMatrix: matrix must be square and non-empty");
    }
    for (Eigen::Index i = 0; i < b_.rows(); ++i) {
        if (b_(i, i) != 0.0) {
            throw std::invalid_argument("CoefficientMatrix: diagonal must be exactly zero");
        }
    }
}

EdgeSet edges_from_coefficients(const CoefficientMatrix& b, EdgeRule rule, double zero_tol) {
    const int p = b.dim();
    EdgeSet edges(p);
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            const bool ij = std::abs(b(i, j)) > zero_tol;
            const bool ji = std::abs(b(j, i)) > zero_tol;
            const bool edge = rule == EdgeRule::either ? (ij || ji) : (ij && ji);
            if (edge) edges.insert(i, j);
        }
    }
    return edges;
}

void write_edge_list(std::ostream& out, const EdgeSet& edges) {
    for (const auto& e : edges.edges()) out << e.i + 1 << ' ' << e.j + 1 << '\n';
}

void write_edge_list(const std::filesystem::path& path, const EdgeSet& edges) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_edge_list: cannot open " + path.string());
    write_edge_list(out, edges);
}

EdgeSet read_edge_list(std::istream& in, int p) {
    EdgeSet edges(p);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        int i = 0;
        int j = 0;
        if (!(fields >> i >> j)) {
            throw std::runtime_error("read_edge_list: malformed line '" + line + "'");
        }
        edges.insert(i - 1, j - 1);
    }
    return edges;
}

} // namespace ggm
