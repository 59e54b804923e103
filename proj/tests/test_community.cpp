#include <doctest.h>

#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "netsample/community.hpp"
#include "oracles.hpp"

using namespace netsample;

namespace {

/// Partitions compared up to community relabeling.
bool same_partition(const Partition& a, const Partition& b) {
    if (a.assignment.size() != b.assignment.size()) return false;
    if (a.community_count != b.community_count) return false;
    std::map<std::uint32_t, std::uint32_t> map_ab;
    for (std::size_t v = 0; v < a.assignment.size(); ++v) {
        auto [it, inserted] = map_ab.emplace(a.assignment[v], b.assignment[v]);
        if (!inserted && it->second != b.assignment[v]) return false;
    }
    return true;
}

/// Exhaustive modularity maximum over all partitions of [0, n); n <= 8.
double brute_force_best_q(const Graph& g, Partition* best_out = nullptr) {
    const NodeId n = g.node_count();
    std::vector<std::uint32_t> labels(n, 0);
    double best = -1.0;
    // enumerate set partitions via restricted growth strings
    std::function<void(NodeId, std::uint32_t)> recurse = [&](NodeId v, std::uint32_t used) {
        if (v == n) {
            Partition p = make_partition(labels);
            double q = modularity(g, p);
            if (q > best) {
                best = q;
                if (best_out) *best_out = p;
            }
            return;
        }
        for (std::uint32_t c = 0; c <= used && c < n; ++c) {
            labels[v] = c;
            recurse(v + 1, std::max(used, c + 1));
        }
    };
    recurse(0, 0);
    return best;
}

} // namespace

TEST_CASE("rak separates disjoint triangles") {
    Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        RakResult r = detect_rak(two, rng);
        CHECK(r.converged);
        CHECK(r.partition.community_count == 2);
        CHECK(r.partition.assignment[0] == r.partition.assignment[1]);
        CHECK(r.partition.assignment[0] == r.partition.assignment[2]);
        CHECK(r.partition.assignment[3] == r.partition.assignment[4]);
        CHECK(r.partition.assignment[3] == r.partition.assignment[5]);
        CHECK(r.partition.assignment[0] != r.partition.assignment[3]);
    }
}

TEST_CASE("rak unifies cliques and keeps singletons") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        CHECK(detect_rak(oracle::complete_graph(5), rng).partition.community_count == 1);
    }
    Rng rng(1);
    Graph single = Graph::from_edges(1, {});
    RakResult r = detect_rak(single, rng);
    CHECK(r.partition.community_count == 1);
    CHECK(r.converged);

    Graph empty;
    CHECK_THROWS_AS(detect_rak(empty, rng), std::invalid_argument);
}

TEST_CASE("rak assigns isolated nodes their own community") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}});
    Rng rng(3);
    Partition p = detect_rak(g, rng).partition;
    CHECK(p.community_count == 2);
    CHECK(p.assignment[3] != p.assignment[0]);
}

TEST_CASE("cnm finds the two-triangle split") {
    Graph t = oracle::toy_t();
    Partition p = detect_cnm(t);
    Partition expected;
    expected.assignment = {0, 0, 0, 1, 1, 1};
    expected.community_count = 2;
    CHECK(same_partition(p, expected));

    // greedy result matches the exhaustive modularity maximum here
    Partition brute;
    brute_force_best_q(t, &brute);
    CHECK(same_partition(p, brute));
}

TEST_CASE("cnm merges cliques fully") {
    Partition k5 = detect_cnm(oracle::complete_graph(5));
    CHECK(k5.community_count == 1);

    Graph two_k4 = Graph::from_edges(
        8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
            {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
    Partition p = detect_cnm(two_k4);
    Partition brute;
    brute_force_best_q(two_k4, &brute);
    CHECK(same_partition(p, brute));
    CHECK(p.community_count == 2);

    Graph empty;
    CHECK_THROWS_AS(detect_cnm(empty), std::invalid_argument);
}

TEST_CASE("cnm leaves isolated nodes as singletons") {
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}});
    Partition p = detect_cnm(g);
    CHECK(p.community_count == 3);
    CHECK(p.assignment[3] != p.assignment[4]);
}

TEST_CASE("every cnm merge takes a maximal gain") {
    Rng rng(13);
    for (int rep = 0; rep < 25; ++rep) {
        NodeId n = 5 + static_cast<NodeId>(rng.below(6));
        Graph g = oracle::random_graph_with_edges(n, 0.3, rng);
        CnmTrace trace;
        detect_cnm(g, &trace);

        // replay the merges against a naive pairwise-gain recomputation
        const long long m = static_cast<long long>(g.edge_count());
        std::vector<std::uint32_t> comm(n);
        for (NodeId v = 0; v < n; ++v) comm[v] = v;
        for (const CnmMerge& merge : trace.merges) {
            std::map<std::pair<std::uint32_t, std::uint32_t>, long long> between;
            std::vector<long long> deg(n, 0);
            for (NodeId v = 0; v < n; ++v) {
                deg[comm[v]] += static_cast<long long>(g.degree(v));
                for (NodeId w : g.neighbors(v)) {
                    if (w > v && comm[v] != comm[w]) {
                        std::pair<std::uint32_t, std::uint32_t> key =
                            std::minmax(comm[v], comm[w]);
                        between[key] += 1;
                    }
                }
            }
            long long best = std::numeric_limits<long long>::min();
            for (const auto& [pair, cnt] : between) {
                best = std::max(best, 4 * m * cnt - 2 * deg[pair.first] * deg[pair.second]);
            }
            CHECK(merge.delta_q_scaled == best);
            for (NodeId v = 0; v < n; ++v) {
                if (comm[v] == merge.from) comm[v] = merge.into;
            }
        }
    }
}

TEST_CASE("cnm is invariant to node relabeling") {
    Rng rng(21);
    for (int rep = 0; rep < 10; ++rep) {
        NodeId n = 8;
        Graph g = oracle::random_graph_with_edges(n, 0.3, rng);
        std::vector<NodeId> perm(n);
        for (NodeId v = 0; v < n; ++v) perm[v] = v;
        rng.shuffle(perm);
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (NodeId v = 0; v < n; ++v) {
            for (NodeId w : g.neighbors(v)) {
                if (w > v) edges.emplace_back(perm[v], perm[w]);
            }
        }
        Graph h = Graph::from_edges(n, std::move(edges));
        Partition pg = detect_cnm(g);
        Partition ph = detect_cnm(h);
        CHECK(modularity(g, pg) == doctest::Approx(modularity(h, ph)));
    }
}

TEST_CASE("modularity hand values") {
    Graph t = oracle::toy_t();
    Partition split;
    split.assignment = {0, 0, 0, 1, 1, 1};
    split.community_count = 2;
    CHECK(modularity(t, split) == doctest::Approx(5.0 / 14.0));

    Partition one;
    one.assignment = {0, 0, 0, 0, 0, 0};
    one.community_count = 1;
    CHECK(modularity(t, one) == doctest::Approx(0.0));

    Graph tri = oracle::triangle();
    Partition singles;
    singles.assignment = {0, 1, 2};
    singles.community_count = 3;
    CHECK(modularity(tri, singles) == doctest::Approx(-1.0 / 3.0));

    Graph empty;
    Partition none;
    CHECK_THROWS_AS(modularity(empty, none), std::invalid_argument);
}

TEST_CASE("modularity is invariant under relabeling and nonpositive for singletons") {
    Rng rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = oracle::random_graph_with_edges(10, 0.3, rng);
        std::vector<std::uint32_t> labels(10);
        for (auto& l : labels) l = static_cast<std::uint32_t>(rng.below(4));
        Partition p = make_partition(labels);
        // relabel communities by swapping ids
        std::vector<std::uint32_t> swapped(10);
        for (std::size_t v = 0; v < 10; ++v) {
            swapped[v] = p.community_count - 1 - p.assignment[v];
        }
        Partition q = make_partition(swapped);
        CHECK(modularity(g, p) == doctest::Approx(modularity(g, q)));

        std::vector<std::uint32_t> single_labels(10);
        for (std::size_t v = 0; v < 10; ++v) single_labels[v] = static_cast<std::uint32_t>(v);
        CHECK(modularity(g, make_partition(single_labels)) <= 0.0);
    }
}

TEST_CASE("partition files load with dense ids") {
    std::unordered_map<std::string, NodeId> ids{{"0", 0}, {"1", 1}, {"2", 2}};
    std::vector<std::string> labels{"0", "1", "2"};

    std::istringstream in("0 a\n1 a\n2 b\n");
    Partition p = load_partition(in, ids, labels);
    CHECK(p.community_count == 2);
    CHECK(p.assignment[0] == p.assignment[1]);
    CHECK(p.assignment[0] != p.assignment[2]);

    std::istringstream missing("0 a\n1 a\n");
    CHECK_THROWS_WITH_AS(load_partition(missing, ids, labels), doctest::Contains("missing"),
                         std::runtime_error);

    std::istringstream conflict("0 a\n1 a\n2 b\n0 b\n");
    CHECK_THROWS_WITH_AS(load_partition(conflict, ids, labels),
                         doctest::Contains("conflicting"), std::runtime_error);

    std::istringstream unknown("0 a\n1 a\nzz b\n");
    CHECK_THROWS_WITH_AS(load_partition(unknown, ids, labels), doctest::Contains("unknown"),
                         std::runtime_error);
}

TEST_CASE("partition write/load round trip") {
    Graph t = oracle::toy_t();
    Partition p = detect_cnm(t);
    std::vector<std::string> labels{"a", "b", "c", "d", "e", "f"};
    std::unordered_map<std::string, NodeId> ids;
    for (NodeId v = 0; v < 6; ++v) ids[labels[v]] = v;

    std::ostringstream out;
    write_partition(p, labels, out);
    std::istringstream in(out.str());
    Partition back = load_partition(in, ids, labels);
    CHECK(same_partition(p, back));
}
