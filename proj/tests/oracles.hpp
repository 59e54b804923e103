// Naive from-definition implementations and small generators used as test
// oracles. Everything here recomputes from scratch, independent of the
// library's incremental code paths.
#ifndef NETSAMPLE_TESTS_ORACLES_HPP
#define NETSAMPLE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "netsample/community.hpp"
#include "netsample/graph.hpp"
#include "netsample/metrics.hpp"
#include "netsample/rng.hpp"
#include "netsample/samplers.hpp"

namespace oracle {

using namespace netsample;

// ---- small fixtures -------------------------------------------------------

/// Two triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
inline Graph toy_t() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

inline Graph triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Graph path_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, std::move(e));
}

/// Center 0, leaves 1..leaves.
inline Graph star_graph(NodeId leaves) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, std::move(e));
}

inline Graph complete_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(e));
}

// ---- random graphs --------------------------------------------------------

inline Graph random_graph(NodeId n, double p, Rng& rng) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (rng.real01() < p) e.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, std::move(e));
}

inline bool is_connected(const Graph& g) {
    return g.node_count() > 0 && largest_component(g).size() == g.node_count();
}

inline Graph random_connected_graph(NodeId n, double p, Rng& rng) {
    for (;;) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
}

inline Graph random_graph_with_edges(NodeId n, double p, Rng& rng) {
    for (;;) {
        Graph g = random_graph(n, p, rng);
        if (g.edge_count() > 0) return g;
    }
}

inline Sample make_sample(const std::vector<NodeId>& trace) {
    Sample s;
    for (NodeId v : trace) s.add(v);
    s.target_k = trace.size();
    return s;
}

/// Uniformly random link-trace growth: at each step a uniform frontier
/// node joins. Starts at `seed`.
inline std::vector<NodeId> random_link_trace(const Graph& g, NodeId seed, std::size_t k,
                                             Rng& rng) {
    std::vector<NodeId> trace{seed};
    std::set<NodeId> members{seed};
    while (trace.size() < k) {
        std::vector<NodeId> frontier =
            neighborhood(g, std::span<const NodeId>(trace.data(), trace.size()));
        if (frontier.empty()) break;
        NodeId v = frontier[static_cast<std::size_t>(rng.below(frontier.size()))];
        trace.push_back(v);
        members.insert(v);
    }
    return trace;
}

// ---- naive set operations -------------------------------------------------

inline std::set<NodeId> naive_neighborhood(const Graph& g, const std::set<NodeId>& s) {
    std::set<NodeId> out;
    for (NodeId v : s) {
        for (NodeId w : g.neighbors(v)) {
            if (!s.count(w)) out.insert(w);
        }
    }
    return out;
}

// ---- naive metrics --------------------------------------------------------

inline std::vector<std::size_t> naive_induced_degrees(const Graph& g,
                                                      const std::vector<NodeId>& members) {
    std::set<NodeId> mset(members.begin(), members.end());
    std::vector<std::size_t> degrees;
    for (NodeId v : members) {
        std::size_t d = 0;
        for (NodeId w : g.neighbors(v)) d += mset.count(w);
        degrees.push_back(d);
    }
    return degrees;
}

inline double naive_ks(std::vector<std::size_t> a, std::vector<std::size_t> b) {
    std::set<std::size_t> support(a.begin(), a.end());
    support.insert(b.begin(), b.end());
    double d = 0.0;
    for (std::size_t x : support) {
        double fa = 0.0, fb = 0.0;
        for (std::size_t v : a) fa += v <= x ? 1.0 : 0.0;
        for (std::size_t v : b) fb += v <= x ? 1.0 : 0.0;
        fa /= static_cast<double>(a.size());
        fb /= static_cast<double>(b.size());
        d = std::max(d, std::fabs(fa - fb));
    }
    return d;
}

inline double naive_distsim(const Graph& g, const std::vector<NodeId>& members,
                            SampleDegrees convention = SampleDegrees::induced) {
    std::vector<std::size_t> graph_deg;
    for (NodeId v = 0; v < g.node_count(); ++v) graph_deg.push_back(g.degree(v));
    std::vector<std::size_t> sample_deg;
    if (convention == SampleDegrees::induced) {
        sample_deg = naive_induced_degrees(g, members);
    } else {
        for (NodeId v : members) sample_deg.push_back(g.degree(v));
    }
    return 1.0 - naive_ks(graph_deg, sample_deg);
}

inline double naive_hubs(const Graph& g, const std::vector<NodeId>& members, std::size_t k) {
    std::vector<NodeId> ids;
    for (NodeId v = 0; v < g.node_count(); ++v) ids.push_back(v);
    std::sort(ids.begin(), ids.end(), [&g](NodeId a, NodeId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    ids.resize(k);
    std::set<NodeId> mset(members.begin(), members.end());
    std::size_t hit = 0;
    for (NodeId v : ids) hit += mset.count(v);
    return static_cast<double>(hit) / static_cast<double>(k);
}

inline double naive_ccloc(const Graph& g, const std::vector<NodeId>& members) {
    std::set<NodeId> mset(members.begin(), members.end());
    std::vector<NodeId> sorted(mset.begin(), mset.end());
    double sum = 0.0;
    for (NodeId v : sorted) {
        std::vector<NodeId> nbrs;
        for (NodeId w : g.neighbors(v)) {
            if (mset.count(w)) nbrs.push_back(w);
        }
        std::size_t d = nbrs.size();
        if (d < 2) continue;
        std::uint64_t links = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.has_edge(nbrs[i], nbrs[j])) ++links;
            }
        }
        sum += 2.0 * static_cast<double>(links) /
               (static_cast<double>(d) * static_cast<double>(d - 1));
    }
    return sum / static_cast<double>(sorted.size());
}

inline double naive_ccglb(const Graph& g, const std::vector<NodeId>& members) {
    std::set<NodeId> mset(members.begin(), members.end());
    std::vector<NodeId> sorted(mset.begin(), mset.end());
    std::uint64_t triangles = 0, triples = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            for (std::size_t l = j + 1; l < sorted.size(); ++l) {
                if (g.has_edge(sorted[i], sorted[j]) && g.has_edge(sorted[j], sorted[l]) &&
                    g.has_edge(sorted[i], sorted[l])) {
                    ++triangles;
                }
            }
        }
    }
    for (std::size_t d : naive_induced_degrees(g, sorted)) triples += d * (d - 1) / 2;
    if (triples == 0) return 0.0;
    return static_cast<double>(3 * triangles) / static_cast<double>(triples);
}

inline double naive_commreach(const Partition& part, const std::vector<NodeId>& members) {
    std::set<std::uint32_t> touched;
    for (NodeId v : members) touched.insert(part.assignment[v]);
    return static_cast<double>(touched.size()) / static_cast<double>(part.community_count);
}

inline double naive_dq(const Graph& g, const std::vector<NodeId>& members) {
    std::set<NodeId> covered(members.begin(), members.end());
    for (NodeId v : members) {
        for (NodeId w : g.neighbors(v)) covered.insert(w);
    }
    return static_cast<double>(covered.size()) / static_cast<double>(g.node_count());
}

// ---- greedy pick oracles ---------------------------------------------------

enum class GreedyKind { ds, sec, xs };

/// All frontier nodes achieving the maximal score, computed from scratch.
inline std::set<NodeId> naive_argmax(const Graph& g, const std::vector<NodeId>& members,
                                     GreedyKind kind) {
    std::set<NodeId> mset(members.begin(), members.end());
    std::set<NodeId> frontier = naive_neighborhood(g, mset);
    std::set<NodeId> covered = mset;
    covered.insert(frontier.begin(), frontier.end());

    std::set<NodeId> best;
    long long best_score = -1;
    for (NodeId v : frontier) {
        long long score = 0;
        switch (kind) {
            case GreedyKind::ds: score = static_cast<long long>(g.degree(v)); break;
            case GreedyKind::sec:
                for (NodeId w : g.neighbors(v)) score += mset.count(w) ? 1 : 0;
                break;
            case GreedyKind::xs:
                for (NodeId w : g.neighbors(v)) score += covered.count(w) ? 0 : 1;
                break;
        }
        if (score > best_score) {
            best_score = score;
            best.clear();
        }
        if (score == best_score) best.insert(v);
    }
    return best;
}

/// Checks every pick of a greedy trace against the from-scratch argmax set.
inline bool greedy_trace_is_optimal(const Graph& g, const std::vector<NodeId>& trace,
                                    GreedyKind kind) {
    std::vector<NodeId> prefix;
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
        prefix.push_back(trace[i]);
        std::set<NodeId> best = naive_argmax(g, prefix, kind);
        if (!best.count(trace[i + 1])) return false;
    }
    return true;
}

} // namespace oracle

#endif
