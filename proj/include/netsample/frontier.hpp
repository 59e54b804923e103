#ifndef NETSAMPLE_FRONTIER_HPP
#define NETSAMPLE_FRONTIER_HPP

#include <cstdint>
#include <vector>

#include "netsample/graph.hpp"
#include "netsample/rng.hpp"

namespace netsample {

/// N(S) with incrementally maintained per-node scores:
///   sec score: number of edges from the current sample S to the node,
///   xs score:  |N({v}) - (N(S) u S)|, the node's novel-neighbor count.
/// A bucket index over the active scoring key answers argmax queries in
/// amortized constant time; ties are resolved uniformly at random.
class Frontier {
public:
    enum class Key { degree, sec, xs };

    Frontier(const Graph& g, Key key);

    /// Moves v into the sample. v must be a frontier node or the seed.
    void add(NodeId v);

    /// Uniformly random node among those maximizing the active key.
    /// Requires a nonempty frontier.
    NodeId pick_max(Rng& rng);

    std::size_t size() const { return frontier_count_; }
    bool in_sample(NodeId v) const { return in_sample_[v] != 0; }
    bool in_frontier(NodeId v) const { return in_frontier_[v] != 0; }
    std::uint32_t sec_score(NodeId v) const { return sec_score_[v]; }
    std::uint32_t xs_score(NodeId v) const { return xs_score_[v]; }

    /// Frontier nodes sorted ascending (test/diagnostic helper).
    std::vector<NodeId> frontier_nodes() const;

    /// All frontier nodes whose active-key score is maximal.
    std::vector<NodeId> argmax_set() const;

    std::size_t sample_size() const { return sample_count_; }
    /// Number of frontier joins so far (each join reads that node's
    /// adjacency, i.e. two-hop access for DS/XS).
    std::size_t join_count() const { return join_count_; }

private:
    std::uint32_t key_score(NodeId v) const;
    void bucket_insert(NodeId v, std::uint32_t score);
    void bucket_remove(NodeId v, std::uint32_t score);
    void bucket_move(NodeId v, std::uint32_t from, std::uint32_t to);
    std::uint32_t current_max() const;

    const Graph& g_;
    Key key_;
    std::vector<char> in_sample_, in_frontier_, covered_;
    std::vector<std::uint32_t> sec_score_, xs_score_;
    std::vector<std::vector<NodeId>> buckets_;
    std::vector<std::uint32_t> bucket_pos_;
    std::uint32_t max_score_ = 0;
    std::size_t frontier_count_ = 0;
    std::size_t sample_count_ = 0;
    std::size_t join_count_ = 0;
};

} // namespace netsample

#endif
