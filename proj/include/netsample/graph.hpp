#ifndef NETSAMPLE_GRAPH_HPP
#define NETSAMPLE_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netsample {

/// Dense node id in [0, n).
using NodeId = std::uint32_t;

/// Immutable simple undirected graph in compressed sparse form.
/// Adjacency lists are sorted ascending, free of self-loops and duplicates,
/// and symmetric. Safe to share across threads once built.
class Graph {
public:
    Graph() = default;

    /// Builds the graph from an edge list. Input edges may be directed,
    /// duplicated or contain self-loops; the result is symmetrized,
    /// deduplicated and loop-free.
    static Graph from_edges(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges);

    NodeId node_count() const { return n_; }

    /// Undirected edge count (each edge counted once).
    std::size_t edge_count() const { return m_; }

    std::size_t degree(NodeId v) const {
        check_node(v);
        return offsets_[v + 1] - offsets_[v];
    }

    /// Sorted distinct neighbors of v, excluding v itself.
    std::span<const NodeId> neighbors(NodeId v) const {
        check_node(v);
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const;

    std::size_t max_degree() const { return max_degree_; }

private:
    void check_node(NodeId v) const;

    NodeId n_ = 0;
    std::size_t m_ = 0;
    std::size_t max_degree_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adj_;
};

/// Graph plus the label mapping recovered from an edge-list file.
/// labels[dense id] = raw token from the input.
struct LoadedGraph {
    Graph graph;
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> label_to_id;
};

/// Parses "u v" edge lines. '#' lines are comments, blank lines are
/// skipped. Raw labels are remapped to dense ids in order of first
/// appearance. Throws std::runtime_error naming the offending line on
/// malformed input, and on empty input.
LoadedGraph load_edge_list(std::istream& in);

LoadedGraph load_edge_list_file(const std::string& path);

/// One "u v" line per edge, u < v, ordered ascending. Labels written when
/// provided, dense ids otherwise.
void write_edge_list(const Graph& g, std::ostream& out,
                     const std::vector<std::string>* labels = nullptr);

/// "raw_label dense_id" per line.
void write_id_mapping(const std::vector<std::string>& labels, std::ostream& out);

/// N(S): nodes outside s adjacent to at least one member of s. Sorted.
std::vector<NodeId> neighborhood(const Graph& g, std::span<const NodeId> s);

/// Subgraph induced by a node set: members (sorted, parent ids) plus a
/// local graph whose node i corresponds to members[i].
struct InducedSubgraph {
    std::vector<NodeId> members;
    Graph graph;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> s);

/// Node set of a maximum-size connected component; ties go to the
/// component containing the smallest node id. Throws on an empty graph.
std::vector<NodeId> largest_component(const Graph& g);

} // namespace netsample

#endif
