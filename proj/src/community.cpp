#include "netsample/community.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace netsample {

Partition make_partition(const std::vector<std::uint32_t>& labels) {
    Partition p;
    p.assignment.resize(labels.size());
    std::unordered_map<std::uint32_t, std::uint32_t> dense;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        auto [it, inserted] = dense.emplace(labels[v], static_cast<std::uint32_t>(dense.size()));
        p.assignment[v] = it->second;
    }
    p.community_count = static_cast<std::uint32_t>(dense.size());
    return p;
}

RakResult detect_rak(const Graph& g, Rng& rng, std::size_t max_sweeps) {
    if (g.node_count() == 0) throw std::invalid_argument("detect_rak: empty graph");
    const NodeId n = g.node_count();
    std::vector<std::uint32_t> label(n);
    std::iota(label.begin(), label.end(), 0u);

    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0u);

    // reusable counting scratch: counts indexed by label, touched tracks
    // which entries need resetting
    std::vector<std::uint32_t> counts(n, 0);
    std::vector<std::uint32_t> seen_labels;
    std::vector<std::uint32_t> majority;

    RakResult result;
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        rng.shuffle(order);
        bool stable = true;
        for (NodeId v : order) {
            auto nbrs = g.neighbors(v);
            if (nbrs.empty()) continue; // isolated nodes keep their own label
            seen_labels.clear();
            std::uint32_t best = 0;
            for (NodeId w : nbrs) {
                std::uint32_t l = label[w];
                if (counts[l] == 0) seen_labels.push_back(l);
                ++counts[l];
                if (counts[l] > best) best = counts[l];
            }
            majority.clear();
            for (std::uint32_t l : seen_labels) {
                if (counts[l] == best) majority.push_back(l);
                counts[l] = 0;
            }
            bool keep = std::find(majority.begin(), majority.end(), label[v]) != majority.end();
            if (!keep) {
                label[v] = majority[static_cast<std::size_t>(rng.below(majority.size()))];
                stable = false;
            }
        }
        result.sweeps = sweep + 1;
        if (stable) {
            result.converged = true;
            break;
        }
    }
    result.partition = make_partition(label);
    return result;
}

namespace {

/// Heap entry for CNM: modularity gain scaled by 4m^2 plus the community
/// pair (a < b). Stale entries are dropped lazily on pop.
struct MergeCandidate {
    long long gain;
    std::uint32_t a, b;
    bool operator<(const MergeCandidate& o) const {
        if (gain != o.gain) return gain < o.gain;
        if (a != o.a) return a > o.a; // smaller pair wins ties
        return b > o.b;
    }
};

} // namespace

Partition detect_cnm(const Graph& g, CnmTrace* trace) {
    if (g.edge_count() == 0) throw std::invalid_argument("detect_cnm: graph has no edges");
    const NodeId n = g.node_count();
    const long long m = static_cast<long long>(g.edge_count());

    // per community: total degree, intra-edge count, edge counts to neighbors
    std::vector<long long> comm_degree(n), comm_intra(n, 0);
    std::vector<std::unordered_map<std::uint32_t, long long>> nbr(n);
    std::vector<char> alive(n, 1);
    for (NodeId v = 0; v < n; ++v) {
        comm_degree[v] = static_cast<long long>(g.degree(v));
        for (NodeId w : g.neighbors(v)) {
            if (w > v) {
                nbr[v][w] += 1;
                nbr[w][v] += 1;
            }
        }
    }

    auto gain_scaled = [m, &nbr, &comm_degree](std::uint32_t a, std::uint32_t b) {
        auto it = nbr[a].find(b);
        long long edges_ab = it == nbr[a].end() ? 0 : it->second;
        return 4 * m * edges_ab - 2 * comm_degree[a] * comm_degree[b];
    };

    std::priority_queue<MergeCandidate> heap;
    for (NodeId v = 0; v < n; ++v) {
        for (const auto& [w, cnt] : nbr[v]) {
            if (w > v) heap.push({gain_scaled(v, w), v, w});
        }
    }

    // Q scaled by 4m^2
    long long q_scaled = 0;
    for (NodeId v = 0; v < n; ++v) q_scaled -= comm_degree[v] * comm_degree[v];
    long long best_q = q_scaled;
    std::size_t best_step = 0;

    std::vector<CnmMerge> merges;
    while (!heap.empty()) {
        MergeCandidate top = heap.top();
        heap.pop();
        if (!alive[top.a] || !alive[top.b]) continue;
        if (gain_scaled(top.a, top.b) != top.gain) continue; // stale
        std::uint32_t a = top.a, b = top.b;                  // merge b into a, a < b

        q_scaled += top.gain;
        merges.push_back({a, b, top.gain});
        comm_intra[a] += comm_intra[b] + nbr[a][b];
        comm_degree[a] += comm_degree[b];
        nbr[a].erase(b);
        alive[b] = 0;
        for (const auto& [x, cnt] : nbr[b]) {
            if (x == a) continue;
            nbr[x].erase(b);
            nbr[x][a] += cnt;
            nbr[a][x] += cnt;
        }
        nbr[b].clear();
        // degrees changed: refresh every pair involving a
        for (const auto& [x, cnt] : nbr[a]) {
            std::uint32_t lo = std::min(a, x), hi = std::max(a, x);
            heap.push({gain_scaled(lo, hi), lo, hi});
        }
        if (q_scaled > best_q) {
            best_q = q_scaled;
            best_step = merges.size();
        }
    }

    // replay the best prefix of the merge sequence
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (std::size_t i = 0; i < best_step; ++i) parent[merges[i].from] = merges[i].into;

    std::vector<std::uint32_t> labels(n);
    for (NodeId v = 0; v < n; ++v) labels[v] = find(v);
    if (trace) {
        trace->merges = std::move(merges);
        trace->best_prefix = best_step;
    }
    return make_partition(labels);
}

double modularity(const Graph& g, const Partition& part) {
    if (g.edge_count() == 0) throw std::invalid_argument("modularity: graph has no edges");
    if (part.assignment.size() != g.node_count()) {
        throw std::invalid_argument("modularity: partition does not cover the graph");
    }
    const double m = static_cast<double>(g.edge_count());
    std::vector<double> intra(part.community_count, 0.0), deg(part.community_count, 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::uint32_t c = part.assignment[v];
        if (c >= part.community_count) throw std::invalid_argument("modularity: bad community id");
        deg[c] += static_cast<double>(g.degree(v));
        for (NodeId w : g.neighbors(v)) {
            if (w > v && part.assignment[w] == c) intra[c] += 1.0;
        }
    }
    double q = 0.0;
    for (std::uint32_t c = 0; c < part.community_count; ++c) {
        double frac = deg[c] / (2.0 * m);
        q += intra[c] / m - frac * frac;
    }
    return q;
}

Partition load_partition(std::istream& in,
                         const std::unordered_map<std::string, NodeId>& label_to_id,
                         const std::vector<std::string>& labels) {
    const NodeId n = static_cast<NodeId>(labels.size());
    std::vector<std::uint32_t> assignment(n, 0);
    std::vector<char> assigned(n, 0);
    std::unordered_map<std::string, std::uint32_t> comm_ids;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string node_tok, comm_tok, extra;
        if (!(ls >> node_tok)) continue;
        if (node_tok.front() == '#') continue;
        if (!(ls >> comm_tok) || (ls >> extra)) {
            throw std::runtime_error("partition line " + std::to_string(line_no) +
                                     ": expected two tokens");
        }
        auto it = label_to_id.find(node_tok);
        if (it == label_to_id.end()) {
            throw std::runtime_error("partition line " + std::to_string(line_no) +
                                     ": unknown node label '" + node_tok + "'");
        }
        auto [cit, inserted] =
            comm_ids.emplace(comm_tok, static_cast<std::uint32_t>(comm_ids.size()));
        NodeId v = it->second;
        if (assigned[v] && assignment[v] != cit->second) {
            throw std::runtime_error("partition line " + std::to_string(line_no) + ": node '" +
                                     node_tok + "' assigned to conflicting communities");
        }
        assigned[v] = 1;
        assignment[v] = cit->second;
    }
    for (NodeId v = 0; v < n; ++v) {
        if (!assigned[v]) {
            throw std::runtime_error("partition is missing node '" + labels[v] + "'");
        }
    }
    Partition p;
    p.assignment = std::move(assignment);
    p.community_count = static_cast<std::uint32_t>(comm_ids.size());
    return p;
}

Partition load_partition_file(const std::string& path,
                              const std::unordered_map<std::string, NodeId>& label_to_id,
                              const std::vector<std::string>& labels) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open partition file: " + path);
    return load_partition(in, label_to_id, labels);
}

void write_partition(const Partition& part, const std::vector<std::string>& labels,
                     std::ostream& out) {
    for (std::size_t v = 0; v < part.assignment.size(); ++v) {
        out << labels[v] << ' ' << part.assignment[v] << '\n';
    }
}

} // namespace netsample
