#include "netsample/samplers.hpp"

#include <deque>
#include <stdexcept>

#include "netsample/frontier.hpp"

namespace netsample {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::bfs: return "bfs";
        case Strategy::dfs: return "dfs";
        case Strategy::rw: return "rw";
        case Strategy::ffs: return "ffs";
        case Strategy::ds: return "ds";
        case Strategy::sec: return "sec";
        case Strategy::xs: return "xs";
        case Strategy::acq: return "acq";
    }
    return "?";
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
    for (Strategy s : all_strategies()) {
        if (name == strategy_name(s)) return s;
    }
    return std::nullopt;
}

const std::vector<Strategy>& all_strategies() {
    static const std::vector<Strategy> all = {Strategy::bfs, Strategy::dfs, Strategy::rw,
                                              Strategy::ffs, Strategy::ds,  Strategy::sec,
                                              Strategy::xs,  Strategy::acq};
    return all;
}

const char* status_name(SampleStatus s) {
    switch (s) {
        case SampleStatus::ok: return "ok";
        case SampleStatus::exhausted: return "exhausted";
        case SampleStatus::step_cap: return "step_cap";
    }
    return "?";
}

namespace {

void validate(const Graph& g, NodeId seed, std::size_t k) {
    if (k < 1) throw std::invalid_argument("sample size k must be >= 1");
    if (seed >= g.node_count()) throw std::out_of_range("seed node out of range");
}

} // namespace

Sample sample_bfs(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig&, Rng&) {
    validate(g, seed, k);
    Sample s;
    s.target_k = k;
    std::vector<char> discovered(g.node_count(), 0);
    std::deque<NodeId> queue;
    discovered[seed] = 1;
    queue.push_back(seed);
    while (!queue.empty() && s.size() < k) {
        NodeId u = queue.front();
        queue.pop_front();
        s.add(u);
        ++s.touched;
        for (NodeId w : g.neighbors(u)) {
            if (!discovered[w]) {
                discovered[w] = 1;
                queue.push_back(w);
            }
        }
    }
    if (s.size() < k) s.status = SampleStatus::exhausted;
    return s;
}

Sample sample_dfs(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig&, Rng&) {
    validate(g, seed, k);
    Sample s;
    s.target_k = k;
    std::vector<char> visited(g.node_count(), 0);
    // stack of (visited node, cursor into its adjacency)
    std::vector<std::pair<NodeId, std::size_t>> stack;
    visited[seed] = 1;
    s.add(seed);
    stack.emplace_back(seed, 0);
    while (!stack.empty() && s.size() < k) {
        auto& [u, cur] = stack.back();
        if (cur == 0) ++s.touched; // first time this node's adjacency is read
        auto nbrs = g.neighbors(u);
        while (cur < nbrs.size() && visited[nbrs[cur]]) ++cur;
        if (cur == nbrs.size()) {
            stack.pop_back();
            continue;
        }
        NodeId v = nbrs[cur++];
        visited[v] = 1;
        s.add(v);
        stack.emplace_back(v, 0);
    }
    if (s.size() < k) s.status = SampleStatus::exhausted;
    return s;
}

Sample sample_rw(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig& cfg,
                 Rng& rng) {
    validate(g, seed, k);
    Sample s;
    s.target_k = k;
    std::vector<char> visited(g.node_count(), 0);
    visited[seed] = 1;
    s.add(seed);
    ++s.touched;
    NodeId current = seed;
    // every `check_interval` hops, verify something unvisited is still reachable
    const std::uint64_t check_interval =
        std::max<std::uint64_t>(4 * static_cast<std::uint64_t>(g.node_count()), 1024);
    std::uint64_t next_check = check_interval;
    while (s.size() < k) {
        std::size_t d = g.degree(current);
        if (d == 0) {
            s.status = SampleStatus::exhausted;
            break;
        }
        if (s.draws >= cfg.step_cap) {
            s.status = SampleStatus::step_cap;
            break;
        }
        if (s.draws >= next_check) {
            next_check += check_interval;
            bool frontier_left = false;
            for (NodeId v : s.trace) {
                for (NodeId w : g.neighbors(v)) {
                    if (!visited[w]) {
                        frontier_left = true;
                        break;
                    }
                }
                if (frontier_left) break;
            }
            if (!frontier_left) {
                s.status = SampleStatus::exhausted;
                break;
            }
        }
        NodeId next = g.neighbors(current)[static_cast<std::size_t>(rng.below(d))];
        ++s.draws;
        if (!visited[next]) {
            visited[next] = 1;
            s.add(next);
            ++s.touched;
        }
        current = next;
    }
    return s;
}

Sample sample_ffs(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig& cfg,
                  Rng& rng) {
    validate(g, seed, k);
    const double p = cfg.burn_probability;
    if (!(p > 0.0 && p <= 1.0)) {
        throw std::invalid_argument("burn probability must be in (0, 1]");
    }
    Sample s;
    s.target_k = k;
    std::vector<char> visited(g.node_count(), 0);
    std::vector<char> scanned(g.node_count(), 0);
    std::deque<NodeId> queue;
    visited[seed] = 1;
    s.add(seed);
    queue.push_back(seed);
    while (s.size() < k) {
        if (queue.empty()) {
            // the fire died: restart from a random sampled node that still
            // has unvisited neighbors, keeping the link-trace property
            std::vector<NodeId> candidates;
            for (NodeId v : s.trace) {
                for (NodeId w : g.neighbors(v)) {
                    if (!visited[w]) {
                        candidates.push_back(v);
                        break;
                    }
                }
            }
            if (candidates.empty()) {
                s.status = SampleStatus::exhausted;
                break;
            }
            queue.push_back(candidates[static_cast<std::size_t>(rng.below(candidates.size()))]);
        }
        NodeId u = queue.front();
        queue.pop_front();
        if (!scanned[u]) {
            scanned[u] = 1;
            ++s.touched;
        }
        for (NodeId w : g.neighbors(u)) {
            if (s.size() >= k) break;
            if (visited[w]) continue;
            if (rng.real01() < p) {
                visited[w] = 1;
                s.add(w);
                queue.push_back(w);
            }
        }
    }
    return s;
}

namespace {

Sample greedy_frontier_sample(const Graph& g, NodeId seed, std::size_t k, Frontier::Key key,
                              Rng& rng) {
    validate(g, seed, k);
    Sample s;
    s.target_k = k;
    Frontier frontier(g, key);
    frontier.add(seed);
    s.add(seed);
    while (s.size() < k) {
        if (frontier.size() == 0) {
            s.status = SampleStatus::exhausted;
            break;
        }
        NodeId v = frontier.pick_max(rng);
        frontier.add(v);
        s.add(v);
    }
    // SEC needs only the sampled nodes' adjacency; DS and XS also query
    // each frontier node (two-hop knowledge)
    s.touched = frontier.sample_size();
    if (key != Frontier::Key::sec) s.touched += frontier.join_count();
    return s;
}

} // namespace

Sample sample_ds(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig&, Rng& rng) {
    return greedy_frontier_sample(g, seed, k, Frontier::Key::degree, rng);
}

Sample sample_sec(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig&, Rng& rng) {
    return greedy_frontier_sample(g, seed, k, Frontier::Key::sec, rng);
}

Sample sample_xs(const Graph& g, NodeId seed, std::size_t k, const SamplerConfig&, Rng& rng) {
    return greedy_frontier_sample(g, seed, k, Frontier::Key::xs, rng);
}

Sample sample_acq(const Graph& g, std::size_t k, const SamplerConfig& cfg, Rng& rng) {
    if (k < 1) throw std::invalid_argument("sample size k must be >= 1");
    if (g.edge_count() == 0) throw std::invalid_argument("acq requires at least one edge");
    Sample s;
    s.target_k = k;
    // only nodes with a neighbor can ever be drawn as someone's acquaintance
    std::size_t selectable = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) > 0) ++selectable;
    }
    std::vector<char> touched_flag(g.node_count(), 0);
    while (s.size() < k) {
        if (s.size() == selectable) {
            s.status = SampleStatus::exhausted;
            break;
        }
        if (s.draws >= cfg.step_cap) {
            s.status = SampleStatus::step_cap;
            break;
        }
        NodeId i = static_cast<NodeId>(rng.below(g.node_count()));
        ++s.draws;
        std::size_t d = g.degree(i);
        if (d == 0) continue;
        if (!touched_flag[i]) {
            touched_flag[i] = 1;
            ++s.touched;
        }
        NodeId j = g.neighbors(i)[static_cast<std::size_t>(rng.below(d))];
        if (!s.contains(j)) s.add(j);
    }
    return s;
}

Sample run_sampler(Strategy strategy, const Graph& g, NodeId seed, std::size_t k,
                   const SamplerConfig& cfg, Rng& rng) {
    switch (strategy) {
        case Strategy::bfs: return sample_bfs(g, seed, k, cfg, rng);
        case Strategy::dfs: return sample_dfs(g, seed, k, cfg, rng);
        case Strategy::rw: return sample_rw(g, seed, k, cfg, rng);
        case Strategy::ffs: return sample_ffs(g, seed, k, cfg, rng);
        case Strategy::ds: return sample_ds(g, seed, k, cfg, rng);
        case Strategy::sec: return sample_sec(g, seed, k, cfg, rng);
        case Strategy::xs: return sample_xs(g, seed, k, cfg, rng);
        case Strategy::acq: return sample_acq(g, k, cfg, rng);
    }
    throw std::logic_error("unknown strategy");
}

} // namespace netsample
