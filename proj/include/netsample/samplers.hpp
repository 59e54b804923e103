#ifndef NETSAMPLE_SAMPLERS_HPP
#define NETSAMPLE_SAMPLERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "netsample/graph.hpp"
#include "netsample/rng.hpp"

namespace netsample {

enum class Strategy { bfs, dfs, rw, ffs, ds, sec, xs, acq };

const char* strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& name);
const std::vector<Strategy>& all_strategies();

enum class SampleStatus {
    ok,        ///< reached the requested size
    exhausted, ///< no reachable node left before k
    step_cap   ///< aborted by the step cap
};

const char* status_name(SampleStatus s);

struct SamplerConfig {
    double burn_probability = 0.7;          ///< FFS exploration probability
    std::uint64_t step_cap = 1000000000ULL; ///< RW hops / ACQ draws safety cap
};

/// Ordered trace of selected nodes with constant-time membership lookup.
struct Sample {
    std::vector<NodeId> trace;
    std::unordered_set<NodeId> members;
    std::size_t target_k = 0;
    SampleStatus status = SampleStatus::ok;
    std::uint64_t draws = 0;   ///< ACQ: node draws; RW: hops taken
    std::uint64_t touched = 0; ///< distinct nodes whose adjacency the strategy read

    void add(NodeId v) {
        trace.push_back(v);
        members.insert(v);
    }
    bool contains(NodeId v) const { return members.find(v) != members.end(); }
    std::size_t size() const { return trace.size(); }
};

/// Link-trace strategies share one contract: grow from the seed by picking
/// nodes from N(S) until |S| = k, or return a partial sample with
/// `exhausted` status once nothing reachable is left. All randomness comes
/// from the supplied stream, so identical inputs give identical traces.
Sample sample_bfs(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig& cfg, Rng& rng);
Sample sample_dfs(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig& cfg, Rng& rng);
Sample sample_rw(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig& cfg, Rng& rng);
Sample sample_ffs(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig& cfg, Rng& rng);
Sample sample_ds(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig& cfg, Rng& rng);
Sample sample_sec(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig& cfg, Rng& rng);
Sample sample_xs(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig& cfg, Rng& rng);

/// Acquaintance sampling: repeatedly draw a uniform node, then one of its
/// neighbors uniformly; keep the neighbor if new. Not link-trace, no seed.
/// Requires at least one edge.
Sample sample_acq(const Graph& g, std::size_t k, const SamplerConfig& cfg, Rng& rng);

/// Dispatch by strategy id. `seed` is ignored for acq.
Sample run_sampler(Strategy strategy, const Graph& g, NodeId seed, std::size_t k,
                   const SamplerConfig& cfg, Rng& rng);

} // namespace netsample

#endif
