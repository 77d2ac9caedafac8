#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ggm/metrics.hpp"
#include "ggm/model.hpp"
#include "ggm/solver_config.hpp"

namespace ggm {

enum class GraphKind { chain, grid, star };
enum class Method { spr, pr, gl, mht };

std::string_view to_string(GraphKind graph);
std::string_view to_string(Method method);
GraphKind parse_graph(std::string_view text);
Method parse_method(std::string_view text);
/// Comma-separated list such as "spr,pr,gl".
std::vector<Method> parse_methods(std::string_view text);

struct BenchmarkSpec {
    GraphKind graph = GraphKind::chain;
    int p = 32;
    int n = 32;
    int replicates = 20;
    std::uint64_t base_seed = 1;
    std::vector<Method> methods{Method::spr, Method::pr, Method::gl, Method::mht};
    /// Defaults to default_lambda(p, n).
    std::optional<double> lambda;
    double tol = 1e-6;
    int max_iter = 1000;
    double alpha = 0.05;
    Correction correction = Correction::none;
    /// Grid shape; 0 picks the most square factorization rows <= cols of p.
    int grid_rows = 0;
    int grid_cols = 0;
    /// Off-diagonal weight; defaults to 0.2 for chain and grid, 0.1 for star.
    std::optional<double> weight;

    void validate() const;
    double effective_lambda() const;
    double effective_weight() const;
    /// (rows, cols) of the grid lattice.
    std::pair<int, int> grid_shape() const;
    SolverConfig solver_config() const;
};

/// Ground-truth precision matrix described by the spec.
PrecisionMatrix build_truth(const BenchmarkSpec& spec);

enum class RecordStatus { ok, not_applicable, failed };

struct BenchmarkRecord {
    GraphKind graph = GraphKind::chain;
    int p = 0;
    int n = 0;
    Method method = Method::spr;
    int replicate = 0;
    std::uint64_t seed = 0;
    double lambda = 0.0;
    ConfusionCounts counts;
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double runtime_ms = 0.0;
    int iterations = 0;
    bool converged = false;
    RecordStatus status = RecordStatus::ok;
    /// Diagnostic for not_applicable and failed rows.
    std::string message;
};

/// Runs every replicate r = 0 .. replicates-1: samples n rows with seed
/// base_seed + r from N(0, Theta^{-1}), standardizes, runs each method on the
/// same data and scores it against the support of Theta. Only the solve is
/// timed. MHT yields a not_applicable row when n <= p + 2; a method that
/// throws yields a failed row. Records come back sorted by
/// (graph, p, n, method, replicate).
std::vector<BenchmarkRecord> run_benchmark(const BenchmarkSpec& spec);

struct FiveNumberSummary {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

/// Quantile by linear interpolation between order statistics (the "type 7"
/// rule): h = (n - 1) q, x[floor h] + (h - floor h)(x[floor h + 1] - x[floor h]).
double quantile(std::span<const double> sorted, double q);
FiveNumberSummary five_number_summary(std::vector<double> values);

struct SummaryRow {
    GraphKind graph = GraphKind::chain;
    int p = 0;
    int n = 0;
    Method method = Method::spr;
    std::string metric;
    FiveNumberSummary stats;
};

/// Five-number summaries of accuracy and runtime_ms for every
/// (graph, p, n, method) group of ok records. Groups with no ok records are
/// skipped, with a line on `warnings` when given.
std::vector<SummaryRow> summarize(const std::vector<BenchmarkRecord>& records, std::ostream* warnings = nullptr);

inline constexpr std::string_view kRecordsHeader =
    "graph,p,n,method,replicate,seed,lambda,tp,tn,fp,fn,accuracy,precision,recall,runtime_ms,iterations,converged";
inline constexpr std::string_view kSummaryHeader = "graph,p,n,method,metric,min,q1,median,q3,max";

/// Writes the header and one line per ok record. Other rows are omitted.
void write_records_csv(std::ostream& out, const std::vector<BenchmarkRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

} // namespace ggm
