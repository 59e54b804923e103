#include "netsample/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "netsample/rng.hpp"

namespace netsample {

namespace {

// stream salts so helper rngs, seed draws and runs never collide
constexpr std::uint64_t kSeedDrawSalt = 0x5EED0001;
constexpr std::uint64_t kRakSalt = 0x7AC00001;
constexpr std::uint64_t kPathSalt = 0x50415448;
constexpr std::uint64_t kRunSaltBase = 0xA1100000;

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::runtime_error("config key '" + key + "': expected a boolean, got '" + v + "'");
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

ExperimentConfig parse_experiment_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected 'key = value'");
        }
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key == "graph") {
            cfg.graph_path = value;
        } else if (key == "strategies") {
            cfg.strategies.clear();
            for (const std::string& tok : split(value, ',')) {
                std::string name = trim(tok);
                if (name == "all") {
                    cfg.strategies = all_strategies();
                    continue;
                }
                auto s = strategy_from_name(name);
                if (!s) throw std::runtime_error("unknown strategy '" + name + "'");
                cfg.strategies.push_back(*s);
            }
        } else if (key == "metrics") {
            cfg.metrics.clear();
            for (const std::string& tok : split(value, ',')) {
                std::string name = trim(tok);
                if (name == "all") {
                    cfg.metrics = all_metrics();
                    continue;
                }
                auto m = metric_from_name(name);
                if (!m) throw std::runtime_error("unknown metric '" + name + "'");
                cfg.metrics.push_back(*m);
            }
        } else if (key == "checkpoints") {
            cfg.checkpoint_spec.clear();
            for (const std::string& tok : split(value, ',')) {
                cfg.checkpoint_spec.push_back(std::stod(trim(tok)));
            }
        } else if (key == "seeds") {
            cfg.seeds = std::stoull(value);
        } else if (key == "hubs_k") {
            cfg.hub_k = std::stoull(value);
        } else if (key == "scale_hubs_k") {
            cfg.scale_hub_k = parse_bool(value, key);
        } else if (key == "ffs_p") {
            cfg.ffs_p = std::stod(value);
        } else if (key == "rng") {
            cfg.master_seed = std::stoull(value);
        } else if (key == "use_largest_component") {
            cfg.use_largest_component = parse_bool(value, key);
        } else if (key == "sample_degrees") {
            if (value == "induced") {
                cfg.sample_degrees = SampleDegrees::induced;
            } else if (value == "original") {
                cfg.sample_degrees = SampleDegrees::original;
            } else {
                throw std::runtime_error("sample_degrees must be 'induced' or 'original'");
            }
        } else if (key == "partition_rak") {
            cfg.partition_rak = value;
        } else if (key == "partition_cnm") {
            cfg.partition_cnm = value;
        } else if (key == "partition_cache") {
            cfg.partition_cache = value;
        } else if (key == "step_cap") {
            cfg.step_cap = std::stoull(value);
        } else {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig parse_experiment_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_experiment_config(in);
}

std::vector<std::size_t> default_checkpoints(std::size_t n) {
    std::size_t lo = std::max<std::size_t>(10, n / 1000);
    std::size_t hi = std::max<std::size_t>(lo, n / 5);
    lo = std::min(lo, n);
    hi = std::min(hi, n);
    std::vector<std::size_t> out;
    const int points = 20;
    for (int i = 0; i < points; ++i) {
        double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        double v = std::exp(std::log(static_cast<double>(lo)) +
                            t * (std::log(static_cast<double>(hi)) -
                                 std::log(static_cast<double>(lo))));
        out.push_back(std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(v))));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> resolve_checkpoints(const ExperimentConfig& cfg, std::size_t n) {
    if (cfg.checkpoint_spec.empty()) return default_checkpoints(n);
    std::vector<std::size_t> out;
    for (double v : cfg.checkpoint_spec) {
        if (!(v > 0.0)) throw std::runtime_error("checkpoint values must be positive");
        std::size_t size;
        if (v < 1.0) {
            size = static_cast<std::size_t>(std::llround(v * static_cast<double>(n)));
            size = std::max<std::size_t>(1, size);
        } else {
            size = static_cast<std::size_t>(std::llround(v));
        }
        if (size > n) throw std::runtime_error("checkpoint " + std::to_string(size) +
                                               " exceeds the node count");
        out.push_back(size);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const char* row_status_name(RowStatus s) {
    switch (s) {
        case RowStatus::ok: return "ok";
        case RowStatus::unreached: return "unreached";
        case RowStatus::error: return "error";
    }
    return "?";
}

std::size_t worker_count() {
    if (const char* env = std::getenv("NETSAMPLE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

/// Runs fn(task) for every task index on up to worker_count() threads.
/// Worker exceptions are rethrown on the calling thread.
void parallel_tasks(std::size_t task_count, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = std::min(worker_count(), task_count);
    if (workers <= 1) {
        for (std::size_t t = 0; t < task_count; ++t) fn(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t t = next.fetch_add(1);
                if (t >= task_count || failed.load()) return;
                try {
                    fn(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::vector<NodeId> draw_seed_nodes(const std::vector<NodeId>& pool, std::size_t count,
                                    Rng& rng) {
    std::vector<NodeId> seeds;
    seeds.reserve(count);
    if (count <= pool.size()) {
        // partial Fisher-Yates: without replacement
        std::vector<NodeId> copy = pool;
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.below(copy.size() - i));
            std::swap(copy[i], copy[j]);
            seeds.push_back(copy[i]);
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            seeds.push_back(pool[static_cast<std::size_t>(rng.below(pool.size()))]);
        }
    }
    return seeds;
}

Partition obtain_partition(const Graph& g, const std::vector<std::string>& labels,
                           const std::string& source, const std::string& cache_path,
                           bool use_rak, std::uint64_t master_seed) {
    auto label_map = [&labels]() {
        std::unordered_map<std::string, NodeId> m;
        for (std::size_t i = 0; i < labels.size(); ++i) m[labels[i]] = static_cast<NodeId>(i);
        return m;
    };
    if (!source.empty()) {
        auto map = label_map();
        return load_partition_file(source, map, labels);
    }
    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        auto map = label_map();
        return load_partition_file(cache_path, map, labels);
    }
    Partition part;
    if (use_rak) {
        Rng rng(derive_seed(master_seed, kRakSalt));
        part = detect_rak(g, rng).partition;
    } else {
        part = detect_cnm(g);
    }
    if (!cache_path.empty()) {
        std::ofstream out(cache_path);
        if (!out) throw std::runtime_error("cannot write partition cache: " + cache_path);
        write_partition(part, labels, out);
    }
    return part;
}

} // namespace

ExperimentResult run_experiment(const Graph& g, const std::vector<std::string>& labels,
                                const ExperimentConfig& cfg) {
    if (g.node_count() == 0) throw std::invalid_argument("run_experiment: empty graph");
    if (cfg.strategies.empty()) throw std::invalid_argument("run_experiment: no strategies");
    if (cfg.seeds < 1) throw std::invalid_argument("run_experiment: seeds must be >= 1");
    if (labels.size() != g.node_count()) {
        throw std::invalid_argument("run_experiment: label table does not match the graph");
    }

    std::vector<std::size_t> checkpoints = resolve_checkpoints(cfg, g.node_count());
    if (checkpoints.empty()) throw std::invalid_argument("run_experiment: no checkpoints");
    const std::size_t k_target = checkpoints.back();

    std::size_t hub_k = cfg.hub_k;
    bool need_hubs = std::find(cfg.metrics.begin(), cfg.metrics.end(), Metric::hubs) !=
                     cfg.metrics.end();
    if (need_hubs && (hub_k < 1 || hub_k > g.node_count())) {
        if (cfg.scale_hub_k) {
            hub_k = std::max<std::size_t>(
                1, std::min<std::size_t>(hub_k, g.node_count() / 10));
        } else {
            throw std::invalid_argument(
                "hubs K exceeds the node count (set scale_hubs_k to shrink it)");
        }
    }

    bool need_rak = std::find(cfg.metrics.begin(), cfg.metrics.end(), Metric::commreach_rak) !=
                    cfg.metrics.end();
    bool need_cnm = std::find(cfg.metrics.begin(), cfg.metrics.end(), Metric::commreach_cnm) !=
                    cfg.metrics.end();
    Partition rak_part, cnm_part;
    if (need_rak) {
        std::string cache =
            cfg.partition_cache.empty() ? "" : cfg.partition_cache + ".rak.txt";
        rak_part = obtain_partition(g, labels, cfg.partition_rak, cache, true, cfg.master_seed);
    }
    if (need_cnm) {
        std::string cache =
            cfg.partition_cache.empty() ? "" : cfg.partition_cache + ".cnm.txt";
        cnm_part = obtain_partition(g, labels, cfg.partition_cnm, cache, false, cfg.master_seed);
    }

    std::vector<NodeId> pool;
    if (cfg.use_largest_component) {
        pool = largest_component(g);
    } else {
        pool.resize(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) pool[v] = v;
    }
    Rng seed_rng(derive_seed(cfg.master_seed, kSeedDrawSalt));
    std::vector<NodeId> seed_nodes = draw_seed_nodes(pool, cfg.seeds, seed_rng);

    SamplerConfig scfg;
    scfg.burn_probability = cfg.ffs_p;
    scfg.step_cap = cfg.step_cap;

    const std::size_t task_count = cfg.strategies.size() * cfg.seeds;
    std::vector<std::vector<RawRow>> per_task(task_count);

    parallel_tasks(task_count, [&](std::size_t task) {
        std::size_t si = task / cfg.seeds;
        std::size_t j = task % cfg.seeds;
        Strategy strategy = cfg.strategies[si];
        NodeId seed = seed_nodes[j];
        Rng rng(derive_seed(cfg.master_seed, kRunSaltBase + si, j));

        std::vector<RawRow>& rows = per_task[task];
        auto make_row = [&](std::size_t checkpoint, const char* metric) {
            RawRow row;
            row.strategy = strategy_name(strategy);
            row.seed_index = j;
            row.seed_node = labels[seed];
            row.checkpoint = checkpoint;
            row.metric = metric;
            return row;
        };
        try {
            Sample sample = run_sampler(strategy, g, seed, k_target, scfg, rng);
            auto records = evaluate_checkpoints(
                g, sample.trace, checkpoints, cfg.metrics, need_rak ? &rak_part : nullptr,
                need_cnm ? &cnm_part : nullptr, hub_k, cfg.sample_degrees);
            for (const auto& rec : records) {
                RawRow row = make_row(rec.checkpoint, metric_name(rec.metric));
                row.value = rec.value;
                row.status = rec.reached ? RowStatus::ok : RowStatus::unreached;
                rows.push_back(row);
            }
        } catch (const std::exception&) {
            rows.clear();
            for (std::size_t c : checkpoints) {
                for (Metric m : cfg.metrics) {
                    RawRow row = make_row(c, metric_name(m));
                    row.status = RowStatus::error;
                    rows.push_back(row);
                }
            }
        }
    });

    ExperimentResult result;
    for (auto& rows : per_task) {
        for (auto& row : rows) {
            if (row.status != RowStatus::ok) result.partial = true;
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

void write_raw_csv(const std::vector<RawRow>& rows, std::ostream& out) {
    out << "strategy,seed_index,seed_node,checkpoint,metric,value,status\n";
    for (const auto& r : rows) {
        out << r.strategy << ',' << r.seed_index << ',' << r.seed_node << ',' << r.checkpoint
            << ',' << r.metric << ',';
        if (r.status == RowStatus::ok) out << format_double(r.value);
        out << ',' << row_status_name(r.status) << '\n';
    }
}

std::vector<RawRow> parse_raw_csv(std::istream& in) {
    std::vector<RawRow> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            if (line.rfind("strategy,", 0) != 0) {
                throw std::runtime_error("raw csv: missing header line");
            }
            continue;
        }
        if (trim(line).empty()) continue;
        std::vector<std::string> f = split(line, ',');
        if (f.size() != 7) {
            throw std::runtime_error("raw csv line " + std::to_string(line_no) +
                                     ": expected 7 fields");
        }
        RawRow r;
        r.strategy = f[0];
        r.seed_index = std::stoull(f[1]);
        r.seed_node = f[2];
        r.checkpoint = std::stoull(f[3]);
        r.metric = f[4];
        if (f[6] == "ok") {
            r.status = RowStatus::ok;
            r.value = std::stod(f[5]);
        } else if (f[6] == "unreached") {
            r.status = RowStatus::unreached;
        } else if (f[6] == "error") {
            r.status = RowStatus::error;
        } else {
            throw std::runtime_error("raw csv line " + std::to_string(line_no) +
                                     ": unknown status '" + f[6] + "'");
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<AggregateRow> aggregate(const std::vector<RawRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("aggregate: no input rows");
    std::map<std::tuple<std::string, std::string, std::size_t>, std::vector<double>> groups;
    for (const auto& r : rows) {
        if (r.status != RowStatus::ok) continue;
        groups[{r.strategy, r.metric, r.checkpoint}].push_back(r.value);
    }
    std::vector<AggregateRow> out;
    for (auto& [key, values] : groups) {
        // summation order is fixed so the output does not depend on row order
        std::sort(values.begin(), values.end());
        AggregateRow row;
        row.strategy = std::get<0>(key);
        row.metric = std::get<1>(key);
        row.checkpoint = std::get<2>(key);
        row.count = values.size();
        if (values.front() == values.back()) {
            // identical runs (or a single one) have exactly zero spread
            row.mean = values.front();
            row.stddev = 0.0;
        } else {
            double sum = 0.0;
            for (double v : values) sum += v;
            row.mean = sum / static_cast<double>(values.size());
            double sq = 0.0;
            for (double v : values) sq += (v - row.mean) * (v - row.mean);
            row.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
        }
        out.push_back(std::move(row));
    }
    return out;
}

void write_aggregate_csv(const std::vector<AggregateRow>& rows, std::ostream& out) {
    out << "strategy,metric,checkpoint,mean,std,count\n";
    for (const auto& r : rows) {
        out << r.strategy << ',' << r.metric << ',' << r.checkpoint << ','
            << format_double(r.mean) << ',' << format_double(r.stddev) << ',' << r.count
            << '\n';
    }
}

void write_gnuplot(const std::vector<AggregateRow>& rows, std::ostream& out) {
    std::string block;
    for (const auto& r : rows) {
        std::string key = r.strategy + " " + r.metric;
        if (key != block) {
            if (!block.empty()) out << "\n\n";
            out << "# strategy=" << r.strategy << " metric=" << r.metric << '\n';
            out << "# checkpoint mean std count\n";
            block = key;
        }
        out << r.checkpoint << ' ' << format_double(r.mean) << ' ' << format_double(r.stddev)
            << ' ' << r.count << '\n';
    }
}

DatasetSummary dataset_summary(const Graph& g, std::size_t exact_limit) {
    DatasetSummary s;
    s.nodes = g.node_count();
    s.edges = g.edge_count();
    const double n = static_cast<double>(g.node_count());
    if (g.node_count() >= 2) {
        s.density = 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
    }
    if (g.node_count() >= 1) {
        s.avg_degree = 2.0 * static_cast<double>(g.edge_count()) / n;
        InducedSubgraph whole;
        whole.members.resize(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) whole.members[v] = v;
        whole.graph = g;
        s.avg_local_cc = ccloc(whole);
    }

    std::vector<NodeId> lcc = largest_component(g);
    s.lcc_size = lcc.size();
    if (lcc.size() < 2) {
        s.path_length = 0.0;
        return s;
    }

    std::vector<NodeId> sources = lcc;
    if (lcc.size() > exact_limit) {
        s.path_length_exact = false;
        Rng rng(kPathSalt);
        sources = draw_seed_nodes(lcc, 1000, rng);
    }

    std::vector<std::int32_t> dist(g.node_count());
    std::vector<NodeId> queue;
    queue.reserve(lcc.size());
    double total = 0.0;
    std::uint64_t pairs = 0;
    for (NodeId src : sources) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(src);
        dist[src] = 0;
        std::size_t head = 0;
        while (head < queue.size()) {
            NodeId u = queue[head++];
            for (NodeId w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    total += dist[w];
                    ++pairs;
                    queue.push_back(w);
                }
            }
        }
    }
    s.path_length = pairs ? total / static_cast<double>(pairs) : 0.0;
    return s;
}

void write_summary(const DatasetSummary& s, std::ostream& out) {
    out << "nodes " << s.nodes << '\n';
    out << "edges " << s.edges << '\n';
    out << "density " << format_double(s.density) << '\n';
    out << "avg_degree " << format_double(s.avg_degree) << '\n';
    out << "avg_local_cc " << format_double(s.avg_local_cc) << '\n';
    out << "path_length " << format_double(s.path_length) << '\n';
    out << "path_length_method " << (s.path_length_exact ? "exact" : "sampled-1000") << '\n';
    out << "largest_component " << s.lcc_size << '\n';
}

std::vector<OutbreakRow> outbreak_comparison(const Graph& g, const OutbreakConfig& cfg) {
    if (cfg.strategies.empty()) throw std::invalid_argument("outbreak: no strategies");
    if (cfg.seeds < 1) throw std::invalid_argument("outbreak: seeds must be >= 1");
    std::vector<double> fractions = cfg.fractions;
    if (fractions.empty()) {
        for (int i = 1; i <= 10; ++i) fractions.push_back(i / 10.0);
    }
    std::vector<char> is_hub(g.node_count(), 0);
    for (NodeId v : top_degree_nodes(g, cfg.hub_k)) is_hub[v] = 1;

    std::vector<std::size_t> thresholds;
    for (double f : fractions) {
        double t = std::ceil(f * static_cast<double>(cfg.hub_k) - 1e-9);
        thresholds.push_back(static_cast<std::size_t>(std::max(0.0, t)));
    }

    std::vector<NodeId> pool;
    if (cfg.use_largest_component) {
        pool = largest_component(g);
    } else {
        pool.resize(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) pool[v] = v;
    }
    std::size_t max_size = cfg.max_size ? cfg.max_size : pool.size();

    Rng seed_rng(derive_seed(cfg.master_seed, kSeedDrawSalt));
    std::vector<NodeId> seed_nodes = draw_seed_nodes(pool, cfg.seeds, seed_rng);

    SamplerConfig scfg;
    scfg.burn_probability = cfg.ffs_p;
    scfg.step_cap = cfg.step_cap;

    const std::size_t task_count = cfg.strategies.size() * cfg.seeds;
    // per run: first sample size reaching each threshold (0 = censored)
    std::vector<std::vector<std::size_t>> reach_size(task_count);

    parallel_tasks(task_count, [&](std::size_t task) {
        std::size_t si = task / cfg.seeds;
        std::size_t j = task % cfg.seeds;
        Rng rng(derive_seed(cfg.master_seed, kRunSaltBase + si, j));
        Sample sample =
            run_sampler(cfg.strategies[si], g, seed_nodes[j], max_size, scfg, rng);
        std::vector<std::size_t>& first = reach_size[task];
        first.assign(thresholds.size(), 0);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < sample.trace.size(); ++i) {
            hits += is_hub[sample.trace[i]] ? 1 : 0;
            for (std::size_t f = 0; f < thresholds.size(); ++f) {
                if (first[f] == 0 && hits >= thresholds[f]) first[f] = i + 1;
            }
        }
    });

    std::vector<OutbreakRow> out;
    for (std::size_t si = 0; si < cfg.strategies.size(); ++si) {
        for (std::size_t f = 0; f < fractions.size(); ++f) {
            OutbreakRow row;
            row.strategy = strategy_name(cfg.strategies[si]);
            row.fraction = fractions[f];
            row.runs = cfg.seeds;
            double total = 0.0;
            for (std::size_t j = 0; j < cfg.seeds; ++j) {
                std::size_t size = reach_size[si * cfg.seeds + j][f];
                if (size == 0) {
                    ++row.censored;
                    size = max_size;
                }
                total += static_cast<double>(size);
            }
            row.mean_size = total / static_cast<double>(cfg.seeds);
            out.push_back(std::move(row));
        }
    }
    return out;
}

void write_outbreak_csv(const std::vector<OutbreakRow>& rows, std::ostream& out) {
    out << "strategy,target_fraction,mean_size,censored,runs\n";
    for (const auto& r : rows) {
        out << r.strategy << ',' << format_double(r.fraction) << ','
            << format_double(r.mean_size) << ',' << r.censored << ',' << r.runs << '\n';
    }
}

} // namespace netsample
