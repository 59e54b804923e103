#include "netsample/frontier.hpp"

#include <stdexcept>

namespace netsample {

Frontier::Frontier(const Graph& g, Key key)
    : g_(g),
      key_(key),
      in_sample_(g.node_count(), 0),
      in_frontier_(g.node_count(), 0),
      covered_(g.node_count(), 0),
      sec_score_(g.node_count(), 0),
      xs_score_(g.node_count(), 0),
      buckets_(g.max_degree() + 1),
      bucket_pos_(g.node_count(), 0) {}

std::uint32_t Frontier::key_score(NodeId v) const {
    switch (key_) {
        case Key::degree: return static_cast<std::uint32_t>(g_.degree(v));
        case Key::sec: return sec_score_[v];
        case Key::xs: return xs_score_[v];
    }
    return 0;
}

void Frontier::bucket_insert(NodeId v, std::uint32_t score) {
    bucket_pos_[v] = static_cast<std::uint32_t>(buckets_[score].size());
    buckets_[score].push_back(v);
    if (score > max_score_) max_score_ = score;
}

void Frontier::bucket_remove(NodeId v, std::uint32_t score) {
    auto& bucket = buckets_[score];
    std::uint32_t pos = bucket_pos_[v];
    bucket[pos] = bucket.back();
    bucket_pos_[bucket[pos]] = pos;
    bucket.pop_back();
}

void Frontier::bucket_move(NodeId v, std::uint32_t from, std::uint32_t to) {
    if (from == to) return;
    bucket_remove(v, from);
    bucket_insert(v, to);
}

std::uint32_t Frontier::current_max() const {
    std::uint32_t s = max_score_;
    while (s > 0 && buckets_[s].empty()) --s;
    return s;
}

void Frontier::add(NodeId v) {
    if (in_sample_[v]) throw std::logic_error("Frontier::add: node already sampled");
    if (in_frontier_[v]) {
        bucket_remove(v, key_score(v));
        in_frontier_[v] = 0;
        --frontier_count_;
    } else if (!covered_[v]) {
        // seed: becoming covered removes v from its neighbors' novel sets
        covered_[v] = 1;
        for (NodeId x : g_.neighbors(v)) {
            if (in_frontier_[x]) {
                if (key_ == Key::xs) bucket_move(x, xs_score_[x], xs_score_[x] - 1);
                --xs_score_[x];
            }
        }
    }
    in_sample_[v] = 1;
    ++sample_count_;

    for (NodeId w : g_.neighbors(v)) {
        if (in_sample_[w]) continue;
        if (!in_frontier_[w]) {
            // w joins N(S); v is its only sampled neighbor so far
            in_frontier_[w] = 1;
            covered_[w] = 1;
            ++frontier_count_;
            ++join_count_;
            sec_score_[w] = 1;
            std::uint32_t novel = 0;
            for (NodeId x : g_.neighbors(w)) {
                if (!covered_[x]) ++novel;
            }
            xs_score_[w] = novel;
            // w is covered now: frontier neighbors lose it as a novel node
            for (NodeId x : g_.neighbors(w)) {
                if (in_frontier_[x]) {
                    if (key_ == Key::xs) bucket_move(x, xs_score_[x], xs_score_[x] - 1);
                    --xs_score_[x];
                }
            }
            bucket_insert(w, key_score(w));
        } else {
            if (key_ == Key::sec) bucket_move(w, sec_score_[w], sec_score_[w] + 1);
            ++sec_score_[w];
        }
    }
}

NodeId Frontier::pick_max(Rng& rng) {
    if (frontier_count_ == 0) throw std::logic_error("Frontier::pick_max: frontier empty");
    max_score_ = current_max();
    const auto& bucket = buckets_[max_score_];
    return bucket[static_cast<std::size_t>(rng.below(bucket.size()))];
}

std::vector<NodeId> Frontier::frontier_nodes() const {
    std::vector<NodeId> out;
    out.reserve(frontier_count_);
    for (NodeId v = 0; v < g_.node_count(); ++v) {
        if (in_frontier_[v]) out.push_back(v);
    }
    return out;
}

std::vector<NodeId> Frontier::argmax_set() const {
    std::vector<NodeId> out;
    if (frontier_count_ == 0) return out;
    out = buckets_[current_max()];
    return out;
}

} // namespace netsample
