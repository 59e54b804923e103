#include "netsample/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace netsample {

void Graph::check_node(NodeId v) const {
    if (v >= n_) {
        throw std::out_of_range("node id " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
    }
}

Graph Graph::from_edges(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges) {
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::out_of_range("edge endpoint out of range");
        }
        if (u > v) std::swap(u, v);
    }
    // drop self-loops, collapse duplicates
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (NodeId v = 0; v < n; ++v) {
        g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1]);
        g.offsets_[v + 1] += g.offsets_[v];
    }
    g.adj_.resize(2 * edges.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // counting insertion preserves order for the u side; the v side needs a sort
    for (NodeId v = 0; v < n; ++v) {
        std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    }
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

LoadedGraph load_edge_list(std::istream& in) {
    LoadedGraph out;
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto intern = [&out](const std::string& tok) -> NodeId {
        auto [it, inserted] =
            out.label_to_id.emplace(tok, static_cast<NodeId>(out.labels.size()));
        if (inserted) out.labels.push_back(tok);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;          // blank line
        if (a.front() == '#') continue;    // comment
        if (!(ls >> b) || (ls >> extra)) {
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected two whitespace-separated tokens");
        }
        NodeId u = intern(a); // interned in reading order
        NodeId v = intern(b);
        edges.emplace_back(u, v);
    }
    if (out.labels.empty()) {
        throw std::runtime_error("edge list is empty");
    }
    out.graph = Graph::from_edges(static_cast<NodeId>(out.labels.size()), std::move(edges));
    return out;
}

LoadedGraph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out,
                     const std::vector<std::string>* labels) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (v <= u) continue;
            if (labels) {
                out << (*labels)[u] << ' ' << (*labels)[v] << '\n';
            } else {
                out << u << ' ' << v << '\n';
            }
        }
    }
}

void write_id_mapping(const std::vector<std::string>& labels, std::ostream& out) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out << labels[i] << ' ' << i << '\n';
    }
}

std::vector<NodeId> neighborhood(const Graph& g, std::span<const NodeId> s) {
    std::vector<char> in_s(g.node_count(), 0);
    for (NodeId v : s) {
        if (v >= g.node_count()) throw std::out_of_range("node set member out of range");
        in_s[v] = 1;
    }
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> result;
    for (NodeId v : s) {
        for (NodeId w : g.neighbors(v)) {
            if (!in_s[w] && !seen[w]) {
                seen[w] = 1;
                result.push_back(w);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> s) {
    InducedSubgraph sub;
    sub.members.assign(s.begin(), s.end());
    std::sort(sub.members.begin(), sub.members.end());
    sub.members.erase(std::unique(sub.members.begin(), sub.members.end()),
                      sub.members.end());

    std::vector<NodeId> local(g.node_count(), 0);
    std::vector<char> is_member(g.node_count(), 0);
    for (std::size_t i = 0; i < sub.members.size(); ++i) {
        NodeId v = sub.members[i];
        if (v >= g.node_count()) throw std::out_of_range("node set member out of range");
        local[v] = static_cast<NodeId>(i);
        is_member[v] = 1;
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u : sub.members) {
        for (NodeId w : g.neighbors(u)) {
            if (w > u && is_member[w]) edges.emplace_back(local[u], local[w]);
        }
    }
    sub.graph = Graph::from_edges(static_cast<NodeId>(sub.members.size()), std::move(edges));
    return sub;
}

std::vector<NodeId> largest_component(const Graph& g) {
    if (g.node_count() == 0) throw std::runtime_error("largest_component: empty graph");
    std::vector<char> visited(g.node_count(), 0);
    std::vector<NodeId> best, current, queue;
    for (NodeId root = 0; root < g.node_count(); ++root) {
        if (visited[root]) continue;
        current.clear();
        queue.assign(1, root);
        visited[root] = 1;
        while (!queue.empty()) {
            NodeId u = queue.back();
            queue.pop_back();
            current.push_back(u);
            for (NodeId w : g.neighbors(u)) {
                if (!visited[w]) {
                    visited[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        // strict ">" keeps the earlier (smallest-root) component on ties
        if (current.size() > best.size()) best = current;
    }
    std::sort(best.begin(), best.end());
    return best;
}

} // namespace netsample
