#ifndef NETSAMPLE_HARNESS_HPP
#define NETSAMPLE_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netsample/community.hpp"
#include "netsample/graph.hpp"
#include "netsample/metrics.hpp"
#include "netsample/samplers.hpp"

namespace netsample {

/// Full experiment description: which strategies and metrics to run, the
/// checkpoint schedule, and the 100-random-seed protocol parameters.
struct ExperimentConfig {
    std::string graph_path;
    std::vector<Strategy> strategies;
    std::vector<Metric> metrics;
    /// Values >= 1 are absolute sample sizes; values in (0, 1) are
    /// fractions of n. Empty = 20 log-spaced sizes up to 0.2 n.
    std::vector<double> checkpoint_spec;
    std::size_t seeds = 100;
    std::size_t hub_k = 100;
    bool scale_hub_k = false; ///< shrink K to max(1, min(K, n/10)) on small graphs
    double ffs_p = 0.7;
    std::uint64_t master_seed = 0;
    bool use_largest_component = true;
    SampleDegrees sample_degrees = SampleDegrees::induced;
    std::string partition_rak;   ///< "" = detect; else partition file path
    std::string partition_cnm;
    std::string partition_cache; ///< optional path prefix for detected partitions
    std::uint64_t step_cap = 1000000000ULL;
};

/// Parses "key = value" lines ('#' comments). Unknown keys are errors.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig parse_experiment_config_file(const std::string& path);

/// Default schedule: 20 log-spaced sizes from max(10, 0.001 n) to 0.2 n.
std::vector<std::size_t> default_checkpoints(std::size_t n);
std::vector<std::size_t> resolve_checkpoints(const ExperimentConfig& cfg, std::size_t n);

enum class RowStatus { ok, unreached, error };
const char* row_status_name(RowStatus s);

struct RawRow {
    std::string strategy;
    std::size_t seed_index = 0;
    std::string seed_node; ///< raw label of the drawn seed
    std::size_t checkpoint = 0;
    std::string metric;
    double value = 0.0; ///< meaningful only when status == ok
    RowStatus status = RowStatus::ok;
};

struct ExperimentResult {
    std::vector<RawRow> rows;
    bool partial = false; ///< some run was exhausted or failed
};

/// Runs every strategy x seed combination, evaluating the metric set at
/// each checkpoint. Seeds are drawn uniformly from the largest component
/// (without replacement while possible) and shared across strategies.
/// Runs execute in parallel (NETSAMPLE_THREADS caps the worker count);
/// output order and content depend only on the configuration.
ExperimentResult run_experiment(const Graph& g, const std::vector<std::string>& labels,
                                const ExperimentConfig& cfg);

void write_raw_csv(const std::vector<RawRow>& rows, std::ostream& out);
std::vector<RawRow> parse_raw_csv(std::istream& in);

struct AggregateRow {
    std::string strategy;
    std::string metric;
    std::size_t checkpoint = 0;
    double mean = 0.0;
    double stddev = 0.0; ///< sample standard deviation, 0 for a single run
    std::size_t count = 0;
};

/// Groups ok-status rows by (strategy, metric, checkpoint). Output is
/// sorted and independent of input row order.
std::vector<AggregateRow> aggregate(const std::vector<RawRow>& rows);

void write_aggregate_csv(const std::vector<AggregateRow>& rows, std::ostream& out);

/// Same data as blocks separated by blank lines, one block per
/// (strategy, metric), columns: checkpoint mean std count.
void write_gnuplot(const std::vector<AggregateRow>& rows, std::ostream& out);

/// Table-style dataset descriptors.
struct DatasetSummary {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double density = 0.0;
    double avg_degree = 0.0;
    double avg_local_cc = 0.0;
    double path_length = 0.0; ///< mean shortest path inside the largest component
    bool path_length_exact = true;
    std::size_t lcc_size = 0;
};

/// Exact BFS from every node for components up to `exact_limit` nodes,
/// 1000-source estimate above (summary.path_length_exact says which).
DatasetSummary dataset_summary(const Graph& g, std::size_t exact_limit = 50000);

void write_summary(const DatasetSummary& s, std::ostream& out);

/// Sample size needed to cover a fraction of the top-K hubs.
struct OutbreakConfig {
    std::vector<Strategy> strategies;
    std::size_t hub_k = 100;
    std::vector<double> fractions; ///< empty = 0.1, 0.2, ..., 1.0
    std::size_t seeds = 100;
    std::uint64_t master_seed = 0;
    std::size_t max_size = 0; ///< 0 = size of the largest component
    double ffs_p = 0.7;
    std::uint64_t step_cap = 1000000000ULL;
    bool use_largest_component = true;
};

struct OutbreakRow {
    std::string strategy;
    double fraction = 0.0;
    double mean_size = 0.0;
    std::size_t censored = 0; ///< runs that never reached the target
    std::size_t runs = 0;
};

std::vector<OutbreakRow> outbreak_comparison(const Graph& g, const OutbreakConfig& cfg);

void write_outbreak_csv(const std::vector<OutbreakRow>& rows, std::ostream& out);

/// Worker count for run parallelism: NETSAMPLE_THREADS when set, hardware
/// concurrency otherwise.
std::size_t worker_count();

/// Deterministic float formatting shared by every CSV writer.
std::string format_double(double v);

} // namespace netsample

#endif
