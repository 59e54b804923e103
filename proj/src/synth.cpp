#include "netsample/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace netsample {

namespace {

void drop_one_stub(std::vector<NodeId>& stubs, NodeId node) {
    auto it = std::find(stubs.begin(), stubs.end(), node);
    stubs.erase(it);
}

} // namespace

PlantedGraph gen_planted_partition(const PlantedPartitionConfig& cfg, Rng& rng) {
    if (cfg.communities < 1 || cfg.community_size < 1) {
        throw std::invalid_argument("planted partition: need at least one community and node");
    }
    if (cfg.e_in >= cfg.community_size) {
        throw std::invalid_argument("planted partition: e_in must be < community size");
    }
    const NodeId n_total = cfg.communities * cfg.community_size;

    PlantedGraph out;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::unordered_set<std::uint64_t> seen;
    auto edge_key = [n_total](NodeId a, NodeId b) {
        return static_cast<std::uint64_t>(std::min(a, b)) * n_total + std::max(a, b);
    };

    // Stubs are matched uniformly at random; colliding stubs (self pairs,
    // repeated edges, same-community inter pairs) go back into the pool and
    // are re-matched for a few rounds before the leftovers are dropped.
    // This keeps realized degrees close to the configured stub counts.
    auto pair_stubs = [&](std::vector<NodeId> stubs, bool inter) {
        std::vector<NodeId> pending;
        for (int round = 0; round < 24 && stubs.size() >= 2; ++round) {
            rng.shuffle(stubs);
            pending.clear();
            for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
                NodeId a = stubs[i], b = stubs[i + 1];
                bool bad = a == b ||
                           (inter && a / cfg.community_size == b / cfg.community_size) ||
                           seen.count(edge_key(a, b)) != 0;
                if (bad) {
                    pending.push_back(a);
                    pending.push_back(b);
                    continue;
                }
                seen.insert(edge_key(a, b));
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
            if (stubs.size() % 2 == 1) pending.push_back(stubs.back());
            if (pending.size() == stubs.size()) break; // no progress
            stubs = pending;
        }
        // whatever is left cannot be matched cleanly; account for it
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            NodeId a = stubs[i], b = stubs[i + 1];
            if (a == b) {
                ++out.report.discarded_self;
            } else if (inter && a / cfg.community_size == b / cfg.community_size) {
                ++out.report.discarded_same_community;
            } else {
                ++out.report.discarded_duplicate;
            }
        }
    };

    // intra stubs, paired within each community
    std::vector<NodeId> stubs;
    for (std::uint32_t c = 0; c < cfg.communities; ++c) {
        stubs.clear();
        NodeId base = c * cfg.community_size;
        for (NodeId v = base; v < base + cfg.community_size; ++v) {
            for (std::uint32_t s = 0; s < cfg.e_in; ++s) stubs.push_back(v);
        }
        if (stubs.size() % 2 == 1) {
            drop_one_stub(stubs, base + static_cast<NodeId>(rng.below(cfg.community_size)));
            ++out.report.dropped_intra_stubs;
        }
        pair_stubs(std::move(stubs), false);
        stubs.clear();
    }

    // inter stubs, paired across the whole graph
    stubs.clear();
    for (NodeId v = 0; v < n_total; ++v) {
        for (std::uint32_t s = 0; s < cfg.e_out; ++s) stubs.push_back(v);
    }
    if (stubs.size() % 2 == 1) {
        drop_one_stub(stubs, static_cast<NodeId>(rng.below(n_total)));
        ++out.report.dropped_inter_stubs;
    }
    pair_stubs(std::move(stubs), true);

    std::size_t intra_edges = 0;
    for (const auto& [a, b] : edges) {
        if (a / cfg.community_size == b / cfg.community_size) ++intra_edges;
    }
    out.report.realized_e_in = 2.0 * static_cast<double>(intra_edges) / n_total;
    out.report.realized_e_out =
        2.0 * static_cast<double>(edges.size() - intra_edges) / n_total;

    out.graph = Graph::from_edges(n_total, std::move(edges));
    out.partition.assignment.resize(n_total);
    for (NodeId v = 0; v < n_total; ++v) out.partition.assignment[v] = v / cfg.community_size;
    out.partition.community_count = cfg.communities;
    return out;
}

ChungLuResult gen_chung_lu(const std::vector<double>& weights, Rng& rng) {
    if (weights.empty()) throw std::invalid_argument("chung-lu: empty weight vector");
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw std::invalid_argument("chung-lu: weights must be positive");
        total += w;
    }
    const NodeId n = static_cast<NodeId>(weights.size());
    ChungLuResult out;
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            double p = weights[i] * weights[j] / total;
            if (p >= 1.0) {
                if (p > 1.0) ++out.capped_pairs;
                edges.emplace_back(i, j);
            } else if (rng.real01() < p) {
                edges.emplace_back(i, j);
            }
        }
    }
    out.graph = Graph::from_edges(n, std::move(edges));
    return out;
}

std::vector<double> power_law_weights(std::size_t n, double gamma, double w_min, double w_max) {
    if (n == 0) throw std::invalid_argument("power_law_weights: n must be >= 1");
    if (!(gamma > 1.0)) throw std::invalid_argument("power_law_weights: gamma must be > 1");
    if (!(w_min > 0.0) || w_min > w_max) {
        throw std::invalid_argument("power_law_weights: need 0 < w_min <= w_max");
    }
    const double exponent = -1.0 / (gamma - 1.0);
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = std::clamp(w_max * std::pow(static_cast<double>(i + 1), exponent), w_min, w_max);
    }
    return w;
}

double conductance(const Graph& g, std::span<const NodeId> s) {
    if (s.empty()) throw std::invalid_argument("conductance: empty node set");
    std::vector<char> in_s(g.node_count(), 0);
    std::size_t distinct = 0;
    for (NodeId v : s) {
        if (v >= g.node_count()) throw std::out_of_range("conductance: node out of range");
        if (!in_s[v]) {
            in_s[v] = 1;
            ++distinct;
        }
    }
    if (distinct == g.node_count()) throw std::invalid_argument("conductance: s must not be V");
    std::uint64_t cut = 0, vol_s = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!in_s[v]) continue;
        vol_s += g.degree(v);
        for (NodeId w : g.neighbors(v)) {
            if (!in_s[w]) ++cut;
        }
    }
    std::uint64_t vol_rest = 2 * g.edge_count() - vol_s;
    std::uint64_t denom = std::min(vol_s, vol_rest);
    if (denom == 0) throw std::invalid_argument("conductance: degenerate denominator");
    return static_cast<double>(cut) / static_cast<double>(denom);
}

namespace {

struct RunningStats {
    double sum = 0.0, sum_sq = 0.0;
    std::size_t n = 0;
    void push(double x) {
        sum += x;
        sum_sq += x * x;
        ++n;
    }
    double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
    double std_error() const {
        if (n < 2) return 0.0;
        double m = mean();
        double var = (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
        return std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    }
};

} // namespace

ExpansionTrialResult xs_expansion_experiment(const ExpansionExperimentConfig& cfg, std::uint64_t master_seed) {
    if (cfg.trials < 1) throw std::invalid_argument("xs-expansion: trials must be >= 1");
    const auto& model = cfg.model;
    const NodeId n_total = model.communities * model.community_size;
    if (cfg.sample_size < 1 || cfg.sample_size >= n_total) {
        throw std::invalid_argument("xs-expansion: sample size must be in [1, |V|)");
    }
    if (cfg.sample_size < 1 + cfg.extra_in_current) {
        throw std::invalid_argument("xs-expansion: sample smaller than the current-community part");
    }
    const std::size_t spread = cfg.sample_size - 1 - cfg.extra_in_current;
    if (spread > model.communities - 1) {
        throw std::invalid_argument("xs-expansion: sample spreads over more communities than exist");
    }
    if (1 + cfg.extra_in_current > model.community_size) {
        throw std::invalid_argument("xs-expansion: current community too small for the sample part");
    }

    ExpansionTrialResult result;
    result.bound = static_cast<double>(n_total) * model.e_in * model.e_in /
                   (static_cast<double>(model.community_size) *
                    (static_cast<double>(n_total) +
                     static_cast<double>(model.e_in) * static_cast<double>(cfg.sample_size)));

    RunningStats stats_new, stats_curr, stats_diff;
    std::vector<NodeId> sample_nodes, cand_curr, cand_new;
    std::vector<char> in_s(n_total), covered(n_total);
    std::vector<NodeId> offsets(model.community_size);

    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng(derive_seed(master_seed, t, 0x7411));
        PlantedGraph pg = gen_planted_partition(model, rng);
        const Graph& g = pg.graph;

        // S: 1 + extra nodes in community 0, one node in each of the next
        // `spread` communities
        sample_nodes.clear();
        for (NodeId i = 0; i < model.community_size; ++i) offsets[i] = i;
        for (std::uint32_t i = 0; i < 1 + cfg.extra_in_current; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.below(model.community_size - i));
            std::swap(offsets[i], offsets[j]);
            sample_nodes.push_back(offsets[i]);
        }
        for (std::size_t c = 1; c <= spread; ++c) {
            NodeId base = static_cast<NodeId>(c) * model.community_size;
            sample_nodes.push_back(base + static_cast<NodeId>(rng.below(model.community_size)));
        }

        std::fill(in_s.begin(), in_s.end(), 0);
        std::fill(covered.begin(), covered.end(), 0);
        for (NodeId v : sample_nodes) {
            in_s[v] = 1;
            covered[v] = 1;
        }
        for (NodeId v : sample_nodes) {
            for (NodeId w : g.neighbors(v)) covered[w] = 1;
        }

        cand_curr.clear();
        cand_new.clear();
        for (NodeId v = 0; v < model.community_size; ++v) {
            if (in_s[v]) continue;
            if (cfg.condition_on_frontier && !covered[v]) continue;
            cand_curr.push_back(v);
        }
        for (NodeId v = static_cast<NodeId>(spread + 1) * model.community_size; v < n_total;
             ++v) {
            if (cfg.condition_on_frontier && !covered[v]) continue;
            cand_new.push_back(v);
        }
        if (cand_curr.empty() || cand_new.empty()) {
            ++result.trials_skipped;
            continue;
        }
        NodeId v_curr = cand_curr[static_cast<std::size_t>(rng.below(cand_curr.size()))];
        NodeId v_new = cand_new[static_cast<std::size_t>(rng.below(cand_new.size()))];

        auto novel_count = [&](NodeId v) {
            std::size_t c = 0;
            for (NodeId w : g.neighbors(v)) {
                if (!covered[w]) ++c;
            }
            return static_cast<double>(c);
        };
        double x_new = novel_count(v_new), x_curr = novel_count(v_curr);
        stats_new.push(x_new);
        stats_curr.push(x_curr);
        stats_diff.push(x_new - x_curr);
    }

    result.trials_used = stats_diff.n;
    result.mean_x_new = stats_new.mean();
    result.mean_x_curr = stats_curr.mean();
    result.mean_diff = stats_diff.mean();
    result.diff_std_error = stats_diff.std_error();
    result.diff_ci99_half_width = 2.5758293035489004 * result.diff_std_error;
    return result;
}

SecOrderResult sec_order_experiment(const SecOrderConfig& cfg, std::uint64_t master_seed) {
    if (cfg.trials < 1) throw std::invalid_argument("sec-order: trials must be >= 1");
    if (cfg.n_heavy < 1 || cfg.n_light < 1) {
        throw std::invalid_argument("sec-order: need candidates in both weight classes");
    }
    std::vector<double> weights;
    weights.reserve(cfg.s_size + cfg.n_heavy + cfg.n_light);
    for (std::size_t i = 0; i < cfg.s_size; ++i) weights.push_back(cfg.w_s);
    for (std::size_t i = 0; i < cfg.n_heavy; ++i) weights.push_back(cfg.w_heavy);
    for (std::size_t i = 0; i < cfg.n_light; ++i) weights.push_back(cfg.w_light);

    SecOrderResult result;
    RunningStats heavy_all, light_all, diff_stats, agreement;

    const NodeId heavy_begin = static_cast<NodeId>(cfg.s_size);
    const NodeId light_begin = static_cast<NodeId>(cfg.s_size + cfg.n_heavy);
    const NodeId n = static_cast<NodeId>(weights.size());

    std::vector<double> heavy_deg, light_deg;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng(derive_seed(master_seed, t, 0x9801));
        Graph g = gen_chung_lu(weights, rng).graph;

        heavy_deg.clear();
        light_deg.clear();
        for (NodeId v = heavy_begin; v < n; ++v) {
            std::size_t induced = 0;
            for (NodeId w : g.neighbors(v)) {
                if (w < cfg.s_size) ++induced;
            }
            // candidates must be in N(S); with an empty S the induced
            // degree is 0 for everyone and the condition is dropped
            if (cfg.s_size > 0 && induced == 0) continue;
            (v < light_begin ? heavy_deg : light_deg).push_back(static_cast<double>(induced));
        }
        if (heavy_deg.empty() || light_deg.empty()) {
            ++result.trials_skipped;
            continue;
        }
        double heavy_sum = 0.0, light_sum = 0.0;
        for (double d : heavy_deg) {
            heavy_all.push(d);
            heavy_sum += d;
        }
        for (double d : light_deg) {
            light_all.push(d);
            light_sum += d;
        }
        diff_stats.push(heavy_sum / static_cast<double>(heavy_deg.size()) -
                        light_sum / static_cast<double>(light_deg.size()));
        std::size_t ordered = 0;
        for (double h : heavy_deg) {
            for (double l : light_deg) {
                if (h >= l) ++ordered;
            }
        }
        agreement.push(static_cast<double>(ordered) /
                       static_cast<double>(heavy_deg.size() * light_deg.size()));
    }

    result.trials_used = diff_stats.n;
    result.mean_heavy = heavy_all.mean();
    result.mean_light = light_all.mean();
    result.count_heavy = heavy_all.n;
    result.count_light = light_all.n;
    result.pair_agreement = agreement.mean();
    result.mean_diff = diff_stats.mean();
    result.diff_std_error = diff_stats.std_error();
    return result;
}

} // namespace netsample
