#ifndef NETSAMPLE_SYNTH_HPP
#define NETSAMPLE_SYNTH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "netsample/community.hpp"
#include "netsample/graph.hpp"
#include "netsample/rng.hpp"

namespace netsample {

/// Planted-partition configuration model: every node gets e_in edge stubs
/// paired inside its community and e_out stubs paired across communities.
struct PlantedPartitionConfig {
    std::uint32_t communities = 0;    ///< |C|
    std::uint32_t community_size = 0; ///< n, nodes per community
    std::uint32_t e_in = 0;           ///< intra-community stubs per node
    std::uint32_t e_out = 0;          ///< inter-community stubs per node
};

/// What the simple-graph projection discarded, plus realized degrees.
struct PlantedGenReport {
    std::size_t dropped_intra_stubs = 0; ///< odd-total fixups
    std::size_t dropped_inter_stubs = 0;
    std::size_t discarded_self = 0;
    std::size_t discarded_duplicate = 0;
    std::size_t discarded_same_community = 0; ///< inter pairs landing inside one community
    double realized_e_in = 0.0;               ///< mean intra-degree in the final graph
    double realized_e_out = 0.0;
};

struct PlantedGraph {
    Graph graph;
    Partition partition; ///< ground truth communities
    PlantedGenReport report;
};

PlantedGraph gen_planted_partition(const PlantedPartitionConfig& cfg, Rng& rng);

/// G(w) expected-degree model: each pair (i, j), i < j, is linked
/// independently with probability min(1, w_i * w_j / sum(w)).
struct ChungLuResult {
    Graph graph;
    std::size_t capped_pairs = 0; ///< pairs whose raw probability exceeded 1
};

ChungLuResult gen_chung_lu(const std::vector<double>& weights, Rng& rng);

/// Rank-ordered power-law weights: w_i = wmax * (i+1)^(-1/(gamma-1)),
/// clamped to [wmin, wmax]. Requires gamma > 1 and 0 < wmin <= wmax.
std::vector<double> power_law_weights(std::size_t n, double gamma, double w_min, double w_max);

/// Conductance phi(S) = cut(S) / min(vol(S), vol(complement)). Throws when
/// s is empty, s = V, or both volumes are zero.
double conductance(const Graph& g, std::span<const NodeId> s);

/// Monte Carlo check of the expansion-vs-community bound: compares the
/// novel-neighbor count of a candidate from an unrepresented community
/// against one from the community already holding a sampled node.
struct ExpansionExperimentConfig {
    PlantedPartitionConfig model;
    std::size_t sample_size = 0;        ///< |S|
    std::size_t trials = 0;
    std::uint32_t extra_in_current = 0; ///< extra S nodes in the current community
    bool condition_on_frontier = true;  ///< candidates drawn from N(S) by rejection
};

struct ExpansionTrialResult {
    double mean_x_new = 0.0;
    double mean_x_curr = 0.0;
    double mean_diff = 0.0; ///< mean of per-trial (x_new - x_curr)
    double diff_std_error = 0.0;
    double diff_ci99_half_width = 0.0;
    double bound = 0.0; ///< |V| e_in^2 / (n (|V| + e_in |S|))
    std::size_t trials_used = 0;
    std::size_t trials_skipped = 0;
};

ExpansionTrialResult xs_expansion_experiment(const ExpansionExperimentConfig& cfg, std::uint64_t master_seed);

/// Monte Carlo check of the expected-degree ordering: candidates with a
/// larger expected degree should show a larger induced degree in
/// G_{S u {v}}. Two candidate weight classes plus a sample class; nodes
/// [0, s_size) form S.
struct SecOrderConfig {
    std::size_t n_heavy = 0;
    double w_heavy = 0.0;
    std::size_t n_light = 0;
    double w_light = 0.0;
    std::size_t s_size = 0;
    double w_s = 0.0;
    std::size_t trials = 0;
};

struct SecOrderResult {
    double mean_heavy = 0.0; ///< mean induced degree of heavy frontier candidates
    double mean_light = 0.0;
    std::size_t count_heavy = 0; ///< frontier candidates observed across trials
    std::size_t count_light = 0;
    double pair_agreement = 0.0; ///< frontier pairs (heavy, light) with ordered degrees
    double mean_diff = 0.0;      ///< per-trial difference of class means
    double diff_std_error = 0.0;
    std::size_t trials_used = 0;
    std::size_t trials_skipped = 0;
};

SecOrderResult sec_order_experiment(const SecOrderConfig& cfg, std::uint64_t master_seed);

} // namespace netsample

#endif
