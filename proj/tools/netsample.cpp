// netsample: link-trace sampling strategies, representativeness metrics,
// synthetic-graph experiments and a reproducible experiment harness.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "netsample/community.hpp"
#include "netsample/graph.hpp"
#include "netsample/harness.hpp"
#include "netsample/metrics.hpp"
#include "netsample/samplers.hpp"
#include "netsample/synth.hpp"

using namespace netsample;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitPartial = 3;

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

std::vector<Strategy> parse_strategies(const std::string& csv) {
    std::vector<Strategy> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "all") {
            return all_strategies();
        }
        auto s = strategy_from_name(tok);
        if (!s) throw std::runtime_error("unknown strategy '" + tok + "'");
        out.push_back(*s);
    }
    if (out.empty()) throw std::runtime_error("no strategies given");
    return out;
}

int cmd_sample(const std::string& graph_path, const std::string& strategy_name_arg,
               const std::string& seed_label, std::size_t k, std::uint64_t seed,
               double p, std::uint64_t step_cap) {
    auto strategy = strategy_from_name(strategy_name_arg);
    if (!strategy) {
        std::cerr << "unknown strategy '" << strategy_name_arg << "'\n";
        return kExitUsage;
    }
    LoadedGraph lg = load_edge_list_file(graph_path);
    NodeId seed_node = 0;
    if (*strategy != Strategy::acq) {
        auto it = lg.label_to_id.find(seed_label);
        if (it == lg.label_to_id.end()) {
            std::cerr << "seed node '" << seed_label << "' not found in the graph\n";
            return kExitData;
        }
        seed_node = it->second;
    }
    SamplerConfig cfg;
    cfg.burn_probability = p;
    cfg.step_cap = step_cap;
    Rng rng(seed);
    Sample s = run_sampler(*strategy, lg.graph, seed_node, k, cfg, rng);
    for (NodeId v : s.trace) std::cout << lg.labels[v] << '\n';
    if (*strategy == Strategy::acq) std::cerr << "draws used: " << s.draws << '\n';
    if (s.status != SampleStatus::ok) {
        std::cerr << "note: sample is partial (" << status_name(s.status) << ", "
                  << s.trace.size() << " of " << k << " nodes)\n";
        return kExitPartial;
    }
    return kExitOk;
}

int cmd_eval(const std::string& graph_path, const std::string& config_path,
             const std::string& out_path, const std::string& mapping_path) {
    ExperimentConfig cfg = parse_experiment_config_file(config_path);
    cfg.graph_path = graph_path.empty() ? cfg.graph_path : graph_path;
    if (cfg.graph_path.empty()) throw std::runtime_error("no graph given");
    LoadedGraph lg = load_edge_list_file(cfg.graph_path);
    ExperimentResult result = run_experiment(lg.graph, lg.labels, cfg);
    std::ofstream out = open_output(out_path);
    write_raw_csv(result.rows, out);
    if (!mapping_path.empty()) {
        std::ofstream map_out = open_output(mapping_path);
        write_id_mapping(lg.labels, map_out);
    }
    return result.partial ? kExitPartial : kExitOk;
}

int cmd_aggregate(const std::string& in_path, const std::string& out_path,
                  const std::string& gnuplot_path) {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open input file: " + in_path);
    std::vector<RawRow> rows = parse_raw_csv(in);
    std::vector<AggregateRow> agg = aggregate(rows);
    std::ofstream out = open_output(out_path);
    write_aggregate_csv(agg, out);
    if (!gnuplot_path.empty()) {
        std::ofstream gp = open_output(gnuplot_path);
        write_gnuplot(agg, gp);
    }
    return kExitOk;
}

int cmd_communities(const std::string& graph_path, const std::string& algo,
                    std::uint64_t seed, const std::string& out_path) {
    LoadedGraph lg = load_edge_list_file(graph_path);
    Partition part;
    bool converged = true;
    if (algo == "rak") {
        Rng rng(seed);
        RakResult r = detect_rak(lg.graph, rng);
        part = r.partition;
        converged = r.converged;
        if (!converged) {
            std::cerr << "note: label propagation hit the sweep cap before converging\n";
        }
    } else if (algo == "cnm") {
        part = detect_cnm(lg.graph);
    } else {
        std::cerr << "unknown algorithm '" << algo << "' (use rak or cnm)\n";
        return kExitUsage;
    }
    std::ofstream out = open_output(out_path);
    write_partition(part, lg.labels, out);
    std::cerr << part.community_count << " communities\n";
    return converged ? kExitOk : kExitPartial;
}

int cmd_summary(const std::string& graph_path) {
    LoadedGraph lg = load_edge_list_file(graph_path);
    DatasetSummary s = dataset_summary(lg.graph);
    write_summary(s, std::cout);
    return kExitOk;
}

int cmd_outbreak(const std::string& graph_path, const std::string& strategies,
                 std::size_t hub_k, std::size_t seeds, std::uint64_t master_seed,
                 const std::string& out_path, std::vector<double> fractions,
                 std::size_t max_size, double p, bool full_graph) {
    LoadedGraph lg = load_edge_list_file(graph_path);
    OutbreakConfig cfg;
    cfg.strategies = parse_strategies(strategies);
    cfg.hub_k = hub_k;
    cfg.seeds = seeds;
    cfg.master_seed = master_seed;
    cfg.fractions = std::move(fractions);
    cfg.max_size = max_size;
    cfg.ffs_p = p;
    cfg.use_largest_component = !full_graph;
    std::vector<OutbreakRow> rows = outbreak_comparison(lg.graph, cfg);
    std::ofstream out = open_output(out_path);
    write_outbreak_csv(rows, out);
    bool censored = false;
    for (const auto& row : rows) censored = censored || row.censored > 0;
    return censored ? kExitPartial : kExitOk;
}

int cmd_synth_planted(std::uint32_t communities, std::uint32_t size, std::uint32_t e_in,
                      std::uint32_t e_out, std::uint64_t seed, const std::string& graph_out,
                      const std::string& partition_out) {
    PlantedPartitionConfig cfg{communities, size, e_in, e_out};
    Rng rng(seed);
    PlantedGraph pg = gen_planted_partition(cfg, rng);
    std::ofstream out = open_output(graph_out);
    write_edge_list(pg.graph, out);
    if (!partition_out.empty()) {
        std::vector<std::string> labels;
        for (NodeId v = 0; v < pg.graph.node_count(); ++v) labels.push_back(std::to_string(v));
        std::ofstream pout = open_output(partition_out);
        write_partition(pg.partition, labels, pout);
    }
    std::cerr << "nodes " << pg.graph.node_count() << ", edges " << pg.graph.edge_count()
              << ", realized e_in " << format_double(pg.report.realized_e_in)
              << ", realized e_out " << format_double(pg.report.realized_e_out) << '\n';
    return kExitOk;
}

int cmd_synth_chunglu(std::size_t n, double gamma, double w_min, double w_max,
                      std::uint64_t seed, const std::string& graph_out) {
    std::vector<double> weights = power_law_weights(n, gamma, w_min, w_max);
    Rng rng(seed);
    ChungLuResult r = gen_chung_lu(weights, rng);
    std::ofstream out = open_output(graph_out);
    write_edge_list(r.graph, out);
    std::cerr << "nodes " << r.graph.node_count() << ", edges " << r.graph.edge_count();
    if (r.capped_pairs > 0) std::cerr << ", capped pairs " << r.capped_pairs;
    std::cerr << '\n';
    return kExitOk;
}

int cmd_theory_xs(std::uint32_t communities, std::uint32_t size, std::uint32_t e_in,
                  std::uint32_t e_out, std::size_t sample_size, std::size_t trials,
                  std::uint32_t extra_in_current, bool unconditioned, std::uint64_t seed,
                  const std::string& out_path) {
    ExpansionExperimentConfig cfg;
    cfg.model = {communities, size, e_in, e_out};
    cfg.sample_size = sample_size;
    cfg.trials = trials;
    cfg.extra_in_current = extra_in_current;
    cfg.condition_on_frontier = !unconditioned;
    ExpansionTrialResult r = xs_expansion_experiment(cfg, seed);
    std::ofstream out = open_output(out_path);
    out << "communities,community_size,e_in,e_out,sample_size,trials,trials_used,"
           "trials_skipped,bound,mean_x_new,mean_x_curr,mean_diff,diff_ci99,conditioned\n";
    out << communities << ',' << size << ',' << e_in << ',' << e_out << ',' << sample_size
        << ',' << trials << ',' << r.trials_used << ',' << r.trials_skipped << ','
        << format_double(r.bound) << ',' << format_double(r.mean_x_new) << ','
        << format_double(r.mean_x_curr) << ',' << format_double(r.mean_diff) << ','
        << format_double(r.diff_ci99_half_width) << ',' << (unconditioned ? 0 : 1) << '\n';
    std::cerr << "mean X_new " << format_double(r.mean_x_new) << ", mean X_curr "
              << format_double(r.mean_x_curr) << ", bound " << format_double(r.bound) << '\n';
    return kExitOk;
}

int cmd_theory_sec(std::size_t n_heavy, double w_heavy, std::size_t n_light, double w_light,
                   std::size_t s_size, double w_s, std::size_t trials, std::uint64_t seed,
                   const std::string& out_path) {
    SecOrderConfig cfg;
    cfg.n_heavy = n_heavy;
    cfg.w_heavy = w_heavy;
    cfg.n_light = n_light;
    cfg.w_light = w_light;
    cfg.s_size = s_size;
    cfg.w_s = w_s;
    cfg.trials = trials;
    SecOrderResult r = sec_order_experiment(cfg, seed);
    std::ofstream out = open_output(out_path);
    out << "n_heavy,w_heavy,n_light,w_light,s_size,w_s,trials,trials_used,trials_skipped,"
           "mean_heavy,mean_light,mean_diff,diff_std_error,pair_agreement\n";
    out << n_heavy << ',' << format_double(w_heavy) << ',' << n_light << ','
        << format_double(w_light) << ',' << s_size << ',' << format_double(w_s) << ','
        << trials << ',' << r.trials_used << ',' << r.trials_skipped << ','
        << format_double(r.mean_heavy) << ',' << format_double(r.mean_light) << ','
        << format_double(r.mean_diff) << ',' << format_double(r.diff_std_error) << ','
        << format_double(r.pair_agreement) << '\n';
    std::cerr << "mean induced degree: heavy " << format_double(r.mean_heavy) << ", light "
              << format_double(r.mean_light) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"link-trace network sampling toolkit"};
    app.require_subcommand(1);

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "run one sampler and print the trace");
    std::string graph_path, strategy = "bfs", seed_label;
    std::size_t k = 10;
    std::uint64_t rng_seed = 0, step_cap = 1000000000ULL;
    double ffs_p = 0.7;
    sample_cmd->add_option("--graph", graph_path, "edge list file")->required();
    sample_cmd->add_option("--strategy", strategy, "bfs|dfs|rw|ffs|ds|sec|xs|acq")->required();
    sample_cmd->add_option("--seed-node", seed_label, "seed node label (not used by acq)");
    sample_cmd->add_option("--k", k, "sample size")->required();
    sample_cmd->add_option("--rng", rng_seed, "rng seed");
    sample_cmd->add_option("--p", ffs_p, "ffs burning probability");
    sample_cmd->add_option("--step-cap", step_cap, "rw/acq step cap");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "run the metric-curve experiment");
    std::string eval_graph, eval_config, eval_out, eval_mapping;
    eval_cmd->add_option("--graph", eval_graph, "edge list file (overrides the config)");
    eval_cmd->add_option("--config", eval_config, "key = value experiment config")->required();
    eval_cmd->add_option("--out", eval_out, "raw csv output")->required();
    eval_cmd->add_option("--mapping-out", eval_mapping, "write the raw-label/dense-id table");

    // aggregate
    auto* agg_cmd = app.add_subcommand("aggregate", "aggregate raw rows to mean/std curves");
    std::string agg_in, agg_out, agg_gnuplot;
    agg_cmd->add_option("--in", agg_in, "raw csv")->required();
    agg_cmd->add_option("--out", agg_out, "aggregate csv")->required();
    agg_cmd->add_option("--gnuplot", agg_gnuplot, "optional gnuplot data file");

    // communities
    auto* comm_cmd = app.add_subcommand("communities", "detect and store a partition");
    std::string comm_graph, comm_algo = "rak", comm_out;
    std::uint64_t comm_seed = 0;
    comm_cmd->add_option("--graph", comm_graph, "edge list file")->required();
    comm_cmd->add_option("--algo", comm_algo, "rak|cnm")->required();
    comm_cmd->add_option("--rng", comm_seed, "rng seed (rak)");
    comm_cmd->add_option("--out", comm_out, "partition file")->required();

    // summary
    auto* summary_cmd = app.add_subcommand("summary", "dataset descriptor record");
    std::string summary_graph;
    summary_cmd->add_option("--graph", summary_graph, "edge list file")->required();

    // outbreak
    auto* outbreak_cmd =
        app.add_subcommand("outbreak", "sample size needed to cover top-degree hubs");
    std::string ob_graph, ob_strategies = "sec,acq", ob_out;
    std::size_t ob_k = 100, ob_seeds = 100, ob_max = 0;
    std::uint64_t ob_seed = 0;
    std::vector<double> ob_fractions;
    double ob_p = 0.7;
    outbreak_cmd->add_option("--graph", ob_graph, "edge list file")->required();
    outbreak_cmd->add_option("--strategies", ob_strategies, "comma-separated strategy list");
    outbreak_cmd->add_option("--K", ob_k, "hub count");
    outbreak_cmd->add_option("--seeds", ob_seeds, "runs per strategy");
    outbreak_cmd->add_option("--rng", ob_seed, "master rng seed");
    outbreak_cmd->add_option("--out", ob_out, "csv output")->required();
    outbreak_cmd->add_option("--fractions", ob_fractions, "target hub fractions");
    outbreak_cmd->add_option("--max-size", ob_max, "sample size cap (0 = component size)");
    outbreak_cmd->add_option("--p", ob_p, "ffs burning probability");
    bool ob_full = false;
    outbreak_cmd->add_flag("--full-graph", ob_full,
                           "draw seeds from the whole graph, not the largest component");

    // synth planted | chunglu
    auto* synth_cmd = app.add_subcommand("synth", "generate synthetic graphs");
    synth_cmd->require_subcommand(1);
    auto* planted_cmd = synth_cmd->add_subcommand("planted", "planted-partition graph");
    std::uint32_t pp_comms = 10, pp_size = 100, pp_ein = 20, pp_eout = 2;
    std::uint64_t pp_seed = 0;
    std::string pp_graph_out, pp_part_out;
    planted_cmd->add_option("--communities", pp_comms, "community count");
    planted_cmd->add_option("--size", pp_size, "nodes per community");
    planted_cmd->add_option("--e-in", pp_ein, "intra stubs per node");
    planted_cmd->add_option("--e-out", pp_eout, "inter stubs per node");
    planted_cmd->add_option("--rng", pp_seed, "rng seed");
    planted_cmd->add_option("--out-graph", pp_graph_out, "edge list output")->required();
    planted_cmd->add_option("--out-partition", pp_part_out, "ground-truth partition output");

    auto* chunglu_cmd = synth_cmd->add_subcommand("chunglu", "expected-degree power-law graph");
    std::size_t cl_n = 20000;
    double cl_gamma = 2.5, cl_wmin = 2.0, cl_wmax = 0.0;
    std::uint64_t cl_seed = 0;
    std::string cl_out;
    chunglu_cmd->add_option("--n", cl_n, "node count");
    chunglu_cmd->add_option("--gamma", cl_gamma, "power-law exponent");
    chunglu_cmd->add_option("--w-min", cl_wmin, "minimum expected degree");
    chunglu_cmd->add_option("--w-max", cl_wmax, "maximum expected degree (0 = sqrt(n))");
    chunglu_cmd->add_option("--rng", cl_seed, "rng seed");
    chunglu_cmd->add_option("--out", cl_out, "edge list output")->required();

    // theory xs-expansion | sec-order
    auto* theory_cmd = app.add_subcommand("theory", "monte carlo checks of the two results");
    theory_cmd->require_subcommand(1);
    auto* xs_cmd = theory_cmd->add_subcommand("xs-expansion", "expansion vs community bound");
    std::uint32_t th_comms = 10, th_size = 100, th_ein = 20, th_eout = 2, th_extra = 0;
    std::size_t th_sample = 5, th_trials = 1000;
    std::uint64_t th_seed = 0;
    bool th_uncond = false;
    std::string th_out;
    xs_cmd->add_option("--communities", th_comms, "community count");
    xs_cmd->add_option("--size", th_size, "nodes per community");
    xs_cmd->add_option("--e-in", th_ein, "intra stubs per node");
    xs_cmd->add_option("--e-out", th_eout, "inter stubs per node");
    xs_cmd->add_option("--sample-size", th_sample, "|S|");
    xs_cmd->add_option("--trials", th_trials, "monte carlo trials");
    xs_cmd->add_option("--extra-in-current", th_extra, "extra S nodes in the current community");
    xs_cmd->add_flag("--unconditioned", th_uncond,
                     "draw candidates without requiring membership in N(S)");
    xs_cmd->add_option("--rng", th_seed, "master rng seed");
    xs_cmd->add_option("--out", th_out, "single-row csv output")->required();

    auto* sec_cmd = theory_cmd->add_subcommand("sec-order", "induced-degree ordering");
    std::size_t se_heavy = 10, se_light = 10, se_s = 20, se_trials = 1000;
    double se_wheavy = 8.0, se_wlight = 2.0, se_ws = 5.0;
    std::uint64_t se_seed = 0;
    std::string se_out;
    sec_cmd->add_option("--n-heavy", se_heavy, "heavy candidate count");
    sec_cmd->add_option("--w-heavy", se_wheavy, "heavy weight");
    sec_cmd->add_option("--n-light", se_light, "light candidate count");
    sec_cmd->add_option("--w-light", se_wlight, "light weight");
    sec_cmd->add_option("--s-size", se_s, "|S|");
    sec_cmd->add_option("--w-s", se_ws, "sample node weight");
    sec_cmd->add_option("--trials", se_trials, "monte carlo trials");
    sec_cmd->add_option("--rng", se_seed, "master rng seed");
    sec_cmd->add_option("--out", se_out, "single-row csv output")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sample_cmd) {
            return cmd_sample(graph_path, strategy, seed_label, k, rng_seed, ffs_p, step_cap);
        }
        if (*eval_cmd) return cmd_eval(eval_graph, eval_config, eval_out, eval_mapping);
        if (*agg_cmd) return cmd_aggregate(agg_in, agg_out, agg_gnuplot);
        if (*comm_cmd) return cmd_communities(comm_graph, comm_algo, comm_seed, comm_out);
        if (*summary_cmd) return cmd_summary(summary_graph);
        if (*outbreak_cmd) {
            return cmd_outbreak(ob_graph, ob_strategies, ob_k, ob_seeds, ob_seed, ob_out,
                                ob_fractions, ob_max, ob_p, ob_full);
        }
        if (*planted_cmd) {
            return cmd_synth_planted(pp_comms, pp_size, pp_ein, pp_eout, pp_seed, pp_graph_out,
                                     pp_part_out);
        }
        if (*chunglu_cmd) {
            double wmax = cl_wmax > 0 ? cl_wmax : std::sqrt(static_cast<double>(cl_n));
            return cmd_synth_chunglu(cl_n, cl_gamma, cl_wmin, wmax, cl_seed, cl_out);
        }
        if (*xs_cmd) {
            return cmd_theory_xs(th_comms, th_size, th_ein, th_eout, th_sample, th_trials,
                                 th_extra, th_uncond, th_seed, th_out);
        }
        if (*sec_cmd) {
            return cmd_theory_sec(se_heavy, se_wheavy, se_light, se_wlight, se_s, se_ws,
                                  se_trials, se_seed, se_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
