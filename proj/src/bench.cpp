#include "ggm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "ggm/coefficients.hpp"
#include "ggm/glasso.hpp"
#include "ggm/mht.hpp"
#include "ggm/parallel_regression.hpp"
#include "ggm/sampling.hpp"
#include "ggm/spr.hpp"
#include "ggm/text_io.hpp"

namespace ggm {

std::string_view to_string(GraphKind graph) {
    switch (graph) {
    case GraphKind::chain: return "chain";
    case GraphKind::grid: return "grid";
    case GraphKind::star: return "star";
    }
    return "?";
}

std::string_view to_string(Method method) {
    switch (method) {
    case Method::spr: return "spr";
    case Method::pr: return "pr";
    case Method::gl: return "gl";
    case Method::mht: return "mht";
    }
    return "?";
}

GraphKind parse_graph(std::string_view text) {
    for (auto g : {GraphKind::chain, GraphKind::grid, GraphKind::star}) {
        if (to_string(g) == text) return g;
    }
    throw std::invalid_argument("unknown graph '" + std::string(text) + "'");
}

Method parse_method(std::string_view text) {
    for (auto m : {Method::spr, Method::pr, Method::gl, Method::mht}) {
        if (to_string(m) == text) return m;
    }
    throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::vector<Method> parse_methods(std::string_view text) {
    std::vector<Method> out;
    for (auto field : split_fields(text, ',')) {
        const Method m = parse_method(field);
        if (std::find(out.begin(), out.end(), m) != out.end()) {
            throw std::invalid_argument("method '" + std::string(field) + "' listed twice");
        }
        out.push_back(m);
    }
    return out;
}

void BenchmarkSpec::validate() const {
    if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (methods.empty()) throw std::invalid_argument("no methods selected");
    if (lambda && !(*lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
    if (graph == GraphKind::grid) {
        const auto [rows, cols] = grid_shape();
        if (rows * cols != p) {
            throw std::invalid_argument("grid shape " + std::to_string(rows) + "x" + std::to_string(cols)
                                        + " does not have p = " + std::to_string(p) + " nodes");
        }
    }
    solver_config().validate();
}

double BenchmarkSpec::effective_lambda() const {
    return lambda ? *lambda : default_lambda(p, n);
}

double BenchmarkSpec::effective_weight() const {
    if (weight) return *weight;
    return graph == GraphKind::star ? 0.1 : 0.2;
}

std::pair<int, int> BenchmarkSpec::grid_shape() const {
    if (grid_rows > 0 && grid_cols > 0) return {grid_rows, grid_cols};
    if (grid_rows > 0) return {grid_rows, p / grid_rows};
    if (grid_cols > 0) return {p / grid_cols, grid_cols};
    int rows = 1;
    for (int r = 1; r * r <= p; ++r) {
        if (p % r == 0) rows = r;
    }
    return {rows, p / rows};
}

SolverConfig BenchmarkSpec::solver_config() const {
    SolverConfig cfg;
    cfg.lambda = effective_lambda();
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    cfg.alpha = alpha;
    cfg.correction = correction;
    return cfg;
}

PrecisionMatrix build_truth(const BenchmarkSpec& spec) {
    const double w = spec.effective_weight();
    switch (spec.graph) {
    case GraphKind::chain: return chain_graph(spec.p, w);
    case GraphKind::grid: {
        const auto [rows, cols] = spec.grid_shape();
        return grid_graph(rows, cols, w);
    }
    case GraphKind::star: return star_graph(spec.p, w);
    }
    throw std::logic_error("build_truth: unhandled graph kind");
}

namespace {

struct MethodOutcome {
    EdgeSet edges;
    int iterations = 0;
    bool converged = true;
};

MethodOutcome run_method(Method method, const DataMatrix& x, const SolverConfig& cfg) {
    switch (method) {
    case Method::spr: {
        auto fit = spr_fit(x, cfg);
        return {edges_from_coefficients(fit.b, EdgeRule::either), fit.report.iterations, fit.report.converged};
    }
    case Method::pr: {
        auto fit = pr_fit(x, cfg);
        return {edges_from_coefficients(fit.b, EdgeRule::either), fit.report.iterations, fit.report.converged};
    }
    case Method::gl: {
        auto fit = glasso_fit(empirical_covariance(x), cfg);
        return {edge_set(fit.theta, kEstimateZeroTol), fit.report.iterations, fit.report.converged};
    }
    case Method::mht: {
        auto fit = mht_fit(x, cfg);
        return {std::move(fit.edges), 0, true};
    }
    }
    throw std::logic_error("run_method: unhandled method");
}

auto sort_key(const BenchmarkRecord& r) {
    return std::make_tuple(r.graph, r.p, r.n, r.method, r.replicate);
}

} // namespace

std::vector<BenchmarkRecord> run_benchmark(const BenchmarkSpec& spec) {
    spec.validate();
    const PrecisionMatrix theta = build_truth(spec);
    const EdgeSet truth = edge_set(theta);
    const Matrix sigma = covariance_from_precision(theta);
    const SolverConfig cfg = spec.solver_config();

    std::vector<BenchmarkRecord> records;
    records.reserve(static_cast<std::size_t>(spec.replicates) * spec.methods.size());
    for (int r = 0; r < spec.replicates; ++r) {
        const std::uint64_t seed = spec.base_seed + static_cast<std::uint64_t>(r);
        auto base = [&](Method m) {
            BenchmarkRecord rec;
            rec.graph = spec.graph;
            rec.p = spec.p;
            rec.n = spec.n;
            rec.method = m;
            rec.replicate = r;
            rec.seed = seed;
            rec.lambda = cfg.lambda;
            return rec;
        };

        std::optional<DataMatrix> data;
        std::string sample_error;
        try {
            data = standardize(sample_gaussian(sigma, spec.n, seed));
        } catch (const std::exception& e) {
            sample_error = e.what();
        }

        for (Method m : spec.methods) {
            BenchmarkRecord rec = base(m);
            if (!data) {
                rec.status = RecordStatus::failed;
                rec.message = sample_error;
                records.push_back(std::move(rec));
                continue;
            }
            if (m == Method::mht && spec.n <= spec.p + 2) {
                rec.status = RecordStatus::not_applicable;
                rec.message = "mht needs n > p + 2";
                records.push_back(std::move(rec));
                continue;
            }
            try {
                const auto start = std::chrono::steady_clock::now();
                MethodOutcome outcome = run_method(m, *data, cfg);
                const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
                rec.counts = confusion(truth, outcome.edges);
                rec.accuracy = accuracy(rec.counts);
                rec.precision = precision(rec.counts);
                rec.recall = recall(rec.counts);
                rec.runtime_ms = elapsed.count();
                rec.iterations = outcome.iterations;
                rec.converged = outcome.converged;
            } catch (const NotApplicable& e) {
                rec.status = RecordStatus::not_applicable;
                rec.message = e.what();
            } catch (const std::exception& e) {
                rec.status = RecordStatus::failed;
                rec.message = e.what();
            }
            records.push_back(std::move(rec));
        }
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const auto& a, const auto& b) { return sort_key(a) < sort_key(b); });
    return records;
}

double quantile(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("quantile: no values");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile: level outside [0, 1]");
    const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

FiveNumberSummary five_number_summary(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::span<const double> v(values);
    return {quantile(v, 0.0), quantile(v, 0.25), quantile(v, 0.5), quantile(v, 0.75), quantile(v, 1.0)};
}

std::vector<SummaryRow> summarize(const std::vector<BenchmarkRecord>& records, std::ostream* warnings) {
    using Key = std::tuple<GraphKind, int, int, Method>;
    std::map<Key, std::pair<std::vector<double>, std::vector<double>>> groups;
    for (const auto& r : records) {
        auto& group = groups[Key{r.graph, r.p, r.n, r.method}];
        if (r.status != RecordStatus::ok) continue;
        group.first.push_back(r.accuracy);
        group.second.push_back(r.runtime_ms);
    }
    std::vector<SummaryRow> rows;
    for (const auto& [key, values] : groups) {
        const auto& [graph, p, n, method] = key;
        if (values.first.empty()) {
            if (warnings) {
                *warnings << "summary: no usable records for " << to_string(graph) << " p=" << p << " n=" << n
                          << " method=" << to_string(method) << ", skipped\n";
            }
            continue;
        }
        rows.push_back({graph, p, n, method, "accuracy", five_number_summary(values.first)});
        rows.push_back({graph, p, n, method, "runtime_ms", five_number_summary(values.second)});
    }
    return rows;
}

void write_records_csv(std::ostream& out, const std::vector<BenchmarkRecord>& records) {
    out << kRecordsHeader << '\n';
    for (const auto& r : records) {
        if (r.status != RecordStatus::ok) continue;
        out << to_string(r.graph) << ',' << r.p << ',' << r.n << ',' << to_string(r.method) << ',' << r.replicate
            << ',' << r.seed << ',' << format_double(r.lambda) << ',' << r.counts.tp << ',' << r.counts.tn << ','
            << r.counts.fp << ',' << r.counts.fn << ',' << format_double(r.accuracy) << ','
            << format_double(r.precision) << ',' << format_double(r.recall) << ',' << format_double(r.runtime_ms)
            << ',' << r.iterations << ',' << (r.converged ? 1 : 0) << '\n';
    }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
    out << kSummaryHeader << '\n';
    for (const auto& row : rows) {
        out << to_string(row.graph) << ',' << row.p << ',' << row.n << ',' << to_string(row.method) << ','
            << row.metric << ',' << format_double(row.stats.min) << ',' << format_double(row.stats.q1) << ','
            << format_double(row.stats.median) << ',' << format_double(row.stats.q3) << ','
            << format_double(row.stats.max) << '\n';
    }
}

} // namespace ggm
