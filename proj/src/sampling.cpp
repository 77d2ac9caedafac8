#include "ggm/sampling.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

#include "ggm/text_io.hpp"

namespace ggm {

namespace {

constexpr double kStandardizedTol = 1e-10;

bool is_standardized(const Matrix& x) {
    const double n = static_cast<double>(x.rows());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        if (std::abs(x.col(j).sum()) > kStandardizedTol * n) return false;
        if (std::abs(x.col(j).squaredNorm() / n - 1.0) > kStandardizedTol) return false;
    }
    return true;
}

} // namespace

DataMatrix::DataMatrix(Matrix values, bool standardized)
    : values_(std::move(values)), standardized_(standardized) {
    if (values_.rows() < 1 || values_.cols() < 1) {
        throw std::invalid_argument("DataMatrix: empty matrix");
    }
    if (!values_.allFinite()) {
        throw std::invalid_argument("DataMatrix: non-finite value");
    }
    if (standardized_ && !is_standardized(values_)) {
        throw std::invalid_argument("DataMatrix: columns are not standardized");
    }
}

CovarianceEstimate::CovarianceEstimate(Matrix sigma_hat) : sigma_(std::move(sigma_hat)) {
    if (sigma_.rows() == 0 || sigma_.rows() != sigma_.cols()) {
        throw std::invalid_argument("CovarianceEstimate: matrix must be square and non-empty");
    }
    if ((sigma_ - sigma_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("CovarianceEstimate: matrix is not symmetric");
    }
}

double NormalRng::uniform_open_closed() {
    // 53 random bits mapped onto (0, 1].
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double NormalRng::operator()() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform_open_closed();
    const double u2 = uniform_open_closed();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Matrix covariance_from_precision(const PrecisionMatrix& theta) {
    Eigen::LLT<Matrix> llt(theta.matrix());
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("covariance_from_precision: Cholesky factorization failed");
    }
    Matrix sigma = llt.solve(Matrix::Identity(theta.dim(), theta.dim()));
    return (sigma + sigma.transpose()) / 2.0;
}

DataMatrix sample_gaussian(const Matrix& sigma, int n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("sample_gaussian: need n >= 1");
    }
    Eigen::LLT<Matrix> llt(sigma);
    if (sigma.rows() != sigma.cols() || llt.info() != Eigen::Success) {
        throw std::invalid_argument("sample_gaussian: covariance is not positive definite");
    }
    const Eigen::Index p = sigma.rows();
    NormalRng rng(seed);
    Matrix z(n, p);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) z(i, j) = rng();
    }
    Matrix lower = llt.matrixL();
    return DataMatrix(z * lower.transpose());
}

DataMatrix standardize(const DataMatrix& x) {
    if (x.n() < 2) {
        throw std::invalid_argument("standardize: need at least two samples");
    }
    const double n = x.n();
    Matrix out = x.values();
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
        auto col = out.col(j);
        col.array() -= col.mean();
        const double scale = std::sqrt(col.squaredNorm() / n);
        if (!(scale > 0.0)) {
            throw std::invalid_argument("standardize: column " + std::to_string(j + 1) + " is constant");
        }
        col /= scale;
    }
    return DataMatrix(std::move(out), true);
}

CovarianceEstimate empirical_covariance(const DataMatrix& x) {
    const Matrix& v = x.values();
    Matrix s = (v.transpose() * v) / static_cast<double>(x.n());
    s = (s + s.transpose()) / 2.0;
    return CovarianceEstimate(std::move(s));
}

DataMatrix read_data_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("read_data_csv: cannot open " + path.string());
    }
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        for (const auto& field : split_fields(line, ',')) {
            row.push_back(parse_double(field, "line " + std::to_string(line_no)));
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw std::runtime_error("read_data_csv: ragged row at line " + std::to_string(line_no));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw std::runtime_error("read_data_csv: no data in " + path.string());
    }
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return DataMatrix(std::move(m));
}

void write_data_csv(const std::filesystem::path& path, const DataMatrix& x) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("write_data_csv: cannot open " + path.string());
    }
    const Matrix& v = x.values();
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        for (Eigen::Index j = 0; j < v.cols(); ++j) {
            if (j) out << ',';
            out << format_double(v(i, j));
        }
        out << '\n';
    }
}

} // namespace ggm
