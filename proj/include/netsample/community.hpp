#ifndef NETSAMPLE_COMMUNITY_HPP
#define NETSAMPLE_COMMUNITY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "netsample/graph.hpp"
#include "netsample/rng.hpp"

namespace netsample {

/// Disjoint community assignment covering every node. Community ids are
/// dense in [0, community_count).
struct Partition {
    std::vector<std::uint32_t> assignment;
    std::uint32_t community_count = 0;
};

/// Densifies an arbitrary labeling into a Partition (labels renumbered in
/// order of first appearance by ascending node id).
Partition make_partition(const std::vector<std::uint32_t>& labels);

struct RakResult {
    Partition partition;
    bool converged = false;
    std::size_t sweeps = 0;
};

/// Asynchronous label propagation: random visit order per sweep, adopt the
/// majority label among neighbors, random tie-break, keep the current
/// label when it is already among the majority. Stops when a full sweep
/// changes nothing, or after max_sweeps (converged = false).
RakResult detect_rak(const Graph& g, Rng& rng, std::size_t max_sweeps = 100);

/// One agglomerative merge step recorded by detect_cnm. Communities are
/// named by the smallest node id they contain; `into` absorbs `from`.
/// delta_q_scaled is the modularity gain times 4m^2 (exact integer).
struct CnmMerge {
    std::uint32_t into = 0;
    std::uint32_t from = 0;
    long long delta_q_scaled = 0;
};

struct CnmTrace {
    std::vector<CnmMerge> merges;
    std::size_t best_prefix = 0; ///< merge count of the best partition
};

/// Greedy modularity maximization: start from singletons, repeatedly merge
/// the connected community pair with the largest modularity gain (ties by
/// smallest id pair), and return the best partition seen along the merge
/// sequence. Requires at least one edge.
Partition detect_cnm(const Graph& g, CnmTrace* trace = nullptr);

/// Q = sum_c [ e_c/m - (d_c/2m)^2 ]. Requires m >= 1.
double modularity(const Graph& g, const Partition& part);

/// Parses "raw_node_label community_label" lines ('#' comments). Every
/// node of the graph must be assigned exactly once (re-stating the same
/// community is allowed). Community ids are densified in order of first
/// appearance.
Partition load_partition(std::istream& in,
                         const std::unordered_map<std::string, NodeId>& label_to_id,
                         const std::vector<std::string>& labels);

Partition load_partition_file(const std::string& path,
                              const std::unordered_map<std::string, NodeId>& label_to_id,
                              const std::vector<std::string>& labels);

/// "raw_node_label community_id" per line.
void write_partition(const Partition& part, const std::vector<std::string>& labels,
                     std::ostream& out);

} // namespace netsample

#endif
