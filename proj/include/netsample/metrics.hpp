#ifndef NETSAMPLE_METRICS_HPP
#define NETSAMPLE_METRICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netsample/community.hpp"
#include "netsample/graph.hpp"
#include "netsample/samplers.hpp"

namespace netsample {

enum class Metric { distsim, hubs, ccloc, ccglb, commreach_rak, commreach_cnm, dq };

const char* metric_name(Metric m);
std::optional<Metric> metric_from_name(const std::string& name);
const std::vector<Metric>& all_metrics();

/// Which degree sequence represents the sample in distsim: degrees in the
/// induced subgraph (default) or degrees in the original network.
enum class SampleDegrees { induced, original };

/// Empirical cumulative degree distribution.
struct DegreeCdf {
    std::vector<std::size_t> values; ///< sorted distinct degree values
    std::vector<double> cumulative;  ///< F at each value; back() == 1
};

/// Throws on an empty multiset.
DegreeCdf degree_cdf(std::vector<std::size_t> degrees);

/// Two-sample Kolmogorov-Smirnov D: sup |F - F_S| over the union of both
/// supports (step functions, so the union points cover every interval).
double ks_distance(const DegreeCdf& a, const DegreeCdf& b);

/// 1 - D between the full graph's degree CDF and the sample's.
double distsim(const Graph& g, const Sample& s, SampleDegrees convention = SampleDegrees::induced);

/// The K highest-degree nodes, ranked by (degree desc, node id asc).
std::vector<NodeId> top_degree_nodes(const Graph& g, std::size_t k);

/// Fraction of the top-K hubs present in the sample. Requires 1 <= K <= n.
double hubs(const Graph& g, const Sample& s, std::size_t k);

/// Mean local clustering coefficient over the subgraph's nodes; nodes of
/// degree < 2 contribute 0. Throws on an empty node set.
double ccloc(const InducedSubgraph& sub);

/// 3 * triangles / connected triples; 0 when there are no triples.
double ccglb(const InducedSubgraph& sub);

/// Fraction of the partition's communities touched by the sample.
double community_reach(const Partition& part, const Sample& s);

/// Discovery quotient |S u N(S)| / |V|.
double dq(const Graph& g, const Sample& s);

/// One metric evaluated at one sample-size checkpoint. `reached` is false
/// when the trace was shorter than the checkpoint (value is unset).
struct CheckpointRecord {
    std::size_t checkpoint = 0;
    Metric metric = Metric::dq;
    double value = 0.0;
    bool reached = true;
};

/// Incremental evaluator: feed the trace one node at a time and snapshot
/// metric values at any prefix. Equivalent to evaluating each metric on
/// the prefix from scratch, in a single pass over the trace.
class CheckpointEvaluator {
public:
    CheckpointEvaluator(const Graph& g, std::vector<Metric> metrics, const Partition* rak,
                        const Partition* cnm, std::size_t hub_k,
                        SampleDegrees convention = SampleDegrees::induced);

    void add(NodeId v);
    std::size_t sample_size() const { return members_.size(); }
    void snapshot(std::size_t checkpoint, std::vector<CheckpointRecord>& out) const;

private:
    double metric_value(Metric m) const;
    double distsim_now() const;
    double ccloc_now() const;

    const Graph& g_;
    std::vector<Metric> metrics_;
    const Partition* rak_;
    const Partition* cnm_;
    std::size_t hub_k_;
    SampleDegrees convention_;

    bool need_induced_ = false;
    bool need_cover_ = false;

    std::vector<NodeId> members_;
    std::vector<char> is_member_;
    std::vector<std::uint32_t> induced_degree_;
    std::vector<std::uint64_t> induced_links_; ///< edges among a member's induced neighbors
    std::uint64_t triples_ = 0;                ///< sum of d(d-1)/2 over induced degrees
    std::uint64_t triangles_ = 0;
    std::vector<char> scratch_flag_;

    std::vector<char> covered_;
    std::size_t covered_count_ = 0;

    std::vector<char> is_hub_;
    std::size_t hub_hits_ = 0;

    std::vector<char> rak_touched_, cnm_touched_;
    std::size_t rak_reached_ = 0, cnm_reached_ = 0;

    DegreeCdf graph_cdf_;
};

/// Evaluates the requested metrics on every checkpoint prefix of the
/// trace. Checkpoints must be sorted ascending; checkpoints beyond the
/// trace length yield records with reached = false.
std::vector<CheckpointRecord> evaluate_checkpoints(
    const Graph& g, std::span<const NodeId> trace, std::span<const std::size_t> checkpoints,
    const std::vector<Metric>& metrics, const Partition* rak, const Partition* cnm,
    std::size_t hub_k, SampleDegrees convention = SampleDegrees::induced);

} // namespace netsample

#endif
