#include "netsample/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netsample {

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::distsim: return "distsim";
        case Metric::hubs: return "hubs";
        case Metric::ccloc: return "ccloc";
        case Metric::ccglb: return "ccglb";
        case Metric::commreach_rak: return "commreach_rak";
        case Metric::commreach_cnm: return "commreach_cnm";
        case Metric::dq: return "dq";
    }
    return "?";
}

std::optional<Metric> metric_from_name(const std::string& name) {
    for (Metric m : all_metrics()) {
        if (name == metric_name(m)) return m;
    }
    return std::nullopt;
}

const std::vector<Metric>& all_metrics() {
    static const std::vector<Metric> all = {
        Metric::distsim,       Metric::hubs,          Metric::ccloc, Metric::ccglb,
        Metric::commreach_rak, Metric::commreach_cnm, Metric::dq};
    return all;
}

DegreeCdf degree_cdf(std::vector<std::size_t> degrees) {
    if (degrees.empty()) throw std::invalid_argument("degree_cdf: empty degree multiset");
    std::sort(degrees.begin(), degrees.end());
    DegreeCdf cdf;
    const double total = static_cast<double>(degrees.size());
    std::size_t i = 0;
    while (i < degrees.size()) {
        std::size_t j = i;
        while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
        cdf.values.push_back(degrees[i]);
        cdf.cumulative.push_back(static_cast<double>(j) / total);
        i = j;
    }
    return cdf;
}

double ks_distance(const DegreeCdf& a, const DegreeCdf& b) {
    double d = 0.0, fa = 0.0, fb = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.values.size() || j < b.values.size()) {
        std::size_t x;
        if (j == b.values.size() || (i < a.values.size() && a.values[i] <= b.values[j])) {
            x = a.values[i];
        } else {
            x = b.values[j];
        }
        if (i < a.values.size() && a.values[i] == x) fa = a.cumulative[i++];
        if (j < b.values.size() && b.values[j] == x) fb = b.cumulative[j++];
        d = std::max(d, std::fabs(fa - fb));
    }
    return d;
}

namespace {

std::vector<std::size_t> graph_degrees(const Graph& g) {
    std::vector<std::size_t> degrees(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
    return degrees;
}

std::vector<std::size_t> sample_degrees(const Graph& g, const Sample& s,
                                        SampleDegrees convention) {
    std::vector<std::size_t> degrees;
    degrees.reserve(s.size());
    if (convention == SampleDegrees::original) {
        for (NodeId v : s.trace) degrees.push_back(g.degree(v));
        return degrees;
    }
    std::vector<char> member(g.node_count(), 0);
    for (NodeId v : s.trace) member[v] = 1;
    for (NodeId v : s.trace) {
        std::size_t d = 0;
        for (NodeId w : g.neighbors(v)) d += member[w];
        degrees.push_back(d);
    }
    return degrees;
}

} // namespace

double distsim(const Graph& g, const Sample& s, SampleDegrees convention) {
    if (s.size() == 0) throw std::invalid_argument("distsim: empty sample");
    DegreeCdf graph_cdf = degree_cdf(graph_degrees(g));
    DegreeCdf sample_cdf = degree_cdf(sample_degrees(g, s, convention));
    return 1.0 - ks_distance(graph_cdf, sample_cdf);
}

std::vector<NodeId> top_degree_nodes(const Graph& g, std::size_t k) {
    if (k < 1 || k > g.node_count()) {
        throw std::invalid_argument("top_degree_nodes: K must be in [1, n]");
    }
    std::vector<NodeId> ids(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) ids[v] = v;
    std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k), ids.end(),
                      [&g](NodeId a, NodeId b) {
                          std::size_t da = g.degree(a), db = g.degree(b);
                          if (da != db) return da > db;
                          return a < b;
                      });
    ids.resize(k);
    return ids;
}

double hubs(const Graph& g, const Sample& s, std::size_t k) {
    std::vector<NodeId> top = top_degree_nodes(g, k);
    std::size_t hit = 0;
    for (NodeId v : top) hit += s.contains(v) ? 1 : 0;
    return static_cast<double>(hit) / static_cast<double>(k);
}

namespace {

/// Per-node induced link counts: links[i] = edges among neighbors of i.
std::vector<std::uint64_t> neighbor_link_counts(const Graph& g) {
    std::vector<std::uint64_t> links(g.node_count(), 0);
    std::vector<char> flag(g.node_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto nbrs = g.neighbors(v);
        for (NodeId u : nbrs) flag[u] = 1;
        std::uint64_t l = 0;
        for (NodeId u : nbrs) {
            for (NodeId w : g.neighbors(u)) {
                if (w > u && flag[w]) ++l;
            }
        }
        links[v] = l;
        for (NodeId u : nbrs) flag[u] = 0;
    }
    return links;
}

} // namespace

double ccloc(const InducedSubgraph& sub) {
    const Graph& g = sub.graph;
    if (g.node_count() == 0) throw std::invalid_argument("ccloc: empty node set");
    std::vector<std::uint64_t> links = neighbor_link_counts(g);
    double sum = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::size_t d = g.degree(v);
        if (d < 2) continue;
        sum += 2.0 * static_cast<double>(links[v]) /
               (static_cast<double>(d) * static_cast<double>(d - 1));
    }
    return sum / static_cast<double>(g.node_count());
}

double ccglb(const InducedSubgraph& sub) {
    const Graph& g = sub.graph;
    if (g.node_count() == 0) throw std::invalid_argument("ccglb: empty node set");
    std::vector<std::uint64_t> links = neighbor_link_counts(g);
    std::uint64_t closed = 0; // sum over nodes = 3 * triangles
    std::uint64_t triples = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        closed += links[v];
        std::uint64_t d = g.degree(v);
        triples += d * (d - 1) / 2;
    }
    if (triples == 0) return 0.0;
    return static_cast<double>(closed) / static_cast<double>(triples);
}

double community_reach(const Partition& part, const Sample& s) {
    if (part.community_count == 0) throw std::invalid_argument("community_reach: empty partition");
    std::vector<char> touched(part.community_count, 0);
    std::size_t reached = 0;
    for (NodeId v : s.trace) {
        if (v >= part.assignment.size()) {
            throw std::invalid_argument("community_reach: sampled node " + std::to_string(v) +
                                        " missing from partition");
        }
        std::uint32_t c = part.assignment[v];
        if (!touched[c]) {
            touched[c] = 1;
            ++reached;
        }
    }
    return static_cast<double>(reached) / static_cast<double>(part.community_count);
}

double dq(const Graph& g, const Sample& s) {
    if (s.size() == 0) throw std::invalid_argument("dq: empty sample");
    std::vector<char> covered(g.node_count(), 0);
    std::size_t count = 0;
    for (NodeId v : s.trace) {
        if (!covered[v]) {
            covered[v] = 1;
            ++count;
        }
        for (NodeId w : g.neighbors(v)) {
            if (!covered[w]) {
                covered[w] = 1;
                ++count;
            }
        }
    }
    return static_cast<double>(count) / static_cast<double>(g.node_count());
}

CheckpointEvaluator::CheckpointEvaluator(const Graph& g, std::vector<Metric> metrics,
                                         const Partition* rak, const Partition* cnm,
                                         std::size_t hub_k, SampleDegrees convention)
    : g_(g), metrics_(std::move(metrics)), rak_(rak), cnm_(cnm), hub_k_(hub_k),
      convention_(convention) {
    bool need_hubs = false, need_rak = false, need_cnm = false, need_distsim = false;
    for (Metric m : metrics_) {
        switch (m) {
            case Metric::distsim:
                need_distsim = true;
                if (convention_ == SampleDegrees::induced) need_induced_ = true;
                break;
            case Metric::ccloc:
            case Metric::ccglb: need_induced_ = true; break;
            case Metric::dq: need_cover_ = true; break;
            case Metric::hubs: need_hubs = true; break;
            case Metric::commreach_rak: need_rak = true; break;
            case Metric::commreach_cnm: need_cnm = true; break;
        }
    }
    is_member_.assign(g.node_count(), 0);
    if (need_induced_) {
        induced_degree_.assign(g.node_count(), 0);
        induced_links_.assign(g.node_count(), 0);
        scratch_flag_.assign(g.node_count(), 0);
    }
    if (need_cover_) covered_.assign(g.node_count(), 0);
    if (need_hubs) {
        is_hub_.assign(g.node_count(), 0);
        for (NodeId v : top_degree_nodes(g, hub_k_)) is_hub_[v] = 1;
    }
    if (need_rak) {
        if (!rak_ || rak_->assignment.size() != g.node_count()) {
            throw std::invalid_argument("commreach_rak requested without a full rak partition");
        }
        rak_touched_.assign(rak_->community_count, 0);
    }
    if (need_cnm) {
        if (!cnm_ || cnm_->assignment.size() != g.node_count()) {
            throw std::invalid_argument("commreach_cnm requested without a full cnm partition");
        }
        cnm_touched_.assign(cnm_->community_count, 0);
    }
    if (need_distsim) graph_cdf_ = degree_cdf(graph_degrees(g));
}

void CheckpointEvaluator::add(NodeId v) {
    if (v >= g_.node_count()) throw std::out_of_range("CheckpointEvaluator::add: bad node");
    if (is_member_[v]) throw std::logic_error("CheckpointEvaluator::add: duplicate node");

    if (need_induced_) {
        // collect sampled neighbors of v and update triangle bookkeeping
        std::vector<NodeId> joined;
        for (NodeId w : g_.neighbors(v)) {
            if (is_member_[w]) {
                joined.push_back(w);
                scratch_flag_[w] = 1;
            }
        }
        std::uint64_t paired = 0;
        for (NodeId a : joined) {
            std::uint64_t cnt = 0;
            for (NodeId x : g_.neighbors(a)) {
                if (scratch_flag_[x]) ++cnt;
            }
            induced_links_[a] += cnt;
            paired += cnt;
            triples_ += induced_degree_[a];
            ++induced_degree_[a];
        }
        induced_links_[v] = paired / 2;
        triangles_ += paired / 2;
        std::uint64_t d = joined.size();
        induced_degree_[v] = static_cast<std::uint32_t>(d);
        triples_ += d * (d - 1) / 2;
        for (NodeId a : joined) scratch_flag_[a] = 0;
    }
    if (need_cover_) {
        if (!covered_[v]) {
            covered_[v] = 1;
            ++covered_count_;
        }
        for (NodeId w : g_.neighbors(v)) {
            if (!covered_[w]) {
                covered_[w] = 1;
                ++covered_count_;
            }
        }
    }
    if (!is_hub_.empty() && is_hub_[v]) ++hub_hits_;
    if (!rak_touched_.empty()) {
        std::uint32_t c = rak_->assignment[v];
        if (!rak_touched_[c]) {
            rak_touched_[c] = 1;
            ++rak_reached_;
        }
    }
    if (!cnm_touched_.empty()) {
        std::uint32_t c = cnm_->assignment[v];
        if (!cnm_touched_[c]) {
            cnm_touched_[c] = 1;
            ++cnm_reached_;
        }
    }
    is_member_[v] = 1;
    members_.push_back(v);
}

double CheckpointEvaluator::distsim_now() const {
    std::vector<std::size_t> degrees;
    degrees.reserve(members_.size());
    for (NodeId v : members_) {
        degrees.push_back(convention_ == SampleDegrees::induced ? induced_degree_[v]
                                                                : g_.degree(v));
    }
    return 1.0 - ks_distance(graph_cdf_, degree_cdf(std::move(degrees)));
}

double CheckpointEvaluator::ccloc_now() const {
    std::vector<NodeId> sorted = members_;
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (NodeId v : sorted) {
        std::uint32_t d = induced_degree_[v];
        if (d < 2) continue;
        sum += 2.0 * static_cast<double>(induced_links_[v]) /
               (static_cast<double>(d) * static_cast<double>(d - 1));
    }
    return sum / static_cast<double>(members_.size());
}

double CheckpointEvaluator::metric_value(Metric m) const {
    switch (m) {
        case Metric::distsim: return distsim_now();
        case Metric::hubs:
            return static_cast<double>(hub_hits_) / static_cast<double>(hub_k_);
        case Metric::ccloc: return ccloc_now();
        case Metric::ccglb:
            if (triples_ == 0) return 0.0;
            return static_cast<double>(3 * triangles_) / static_cast<double>(triples_);
        case Metric::commreach_rak:
            return static_cast<double>(rak_reached_) /
                   static_cast<double>(rak_->community_count);
        case Metric::commreach_cnm:
            return static_cast<double>(cnm_reached_) /
                   static_cast<double>(cnm_->community_count);
        case Metric::dq:
            return static_cast<double>(covered_count_) / static_cast<double>(g_.node_count());
    }
    return 0.0;
}

void CheckpointEvaluator::snapshot(std::size_t checkpoint,
                                   std::vector<CheckpointRecord>& out) const {
    for (Metric m : metrics_) {
        out.push_back({checkpoint, m, metric_value(m), true});
    }
}

std::vector<CheckpointRecord> evaluate_checkpoints(
    const Graph& g, std::span<const NodeId> trace, std::span<const std::size_t> checkpoints,
    const std::vector<Metric>& metrics, const Partition* rak, const Partition* cnm,
    std::size_t hub_k, SampleDegrees convention) {
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] == 0) throw std::invalid_argument("checkpoint sizes must be >= 1");
        if (i > 0 && checkpoints[i] < checkpoints[i - 1]) {
            throw std::invalid_argument("checkpoints must be sorted ascending");
        }
    }
    std::vector<CheckpointRecord> out;
    if (metrics.empty() || checkpoints.empty()) return out;

    CheckpointEvaluator eval(g, metrics, rak, cnm, hub_k, convention);
    std::size_t next = 0;
    for (NodeId v : trace) {
        eval.add(v);
        while (next < checkpoints.size() && checkpoints[next] == eval.sample_size()) {
            eval.snapshot(checkpoints[next], out);
            ++next;
        }
    }
    // checkpoints past the end of the trace are reported as unreached
    for (; next < checkpoints.size(); ++next) {
        for (Metric m : metrics) {
            CheckpointRecord rec;
            rec.checkpoint = checkpoints[next];
            rec.metric = m;
            rec.value = std::nan("");
            rec.reached = false;
            out.push_back(rec);
        }
    }
    return out;
}

} // namespace netsample
