#include "basepack/layered_packing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace basepack {

LayeredPacking::LayeredPacking(int n, int k, std::optional<PruneConfig> prune)
    : n_(n), k_(k), prune_(prune) {
    if (k < 1) throw Error("layered packing needs at least one layer");
    layers_.reserve(k);
    for (int j = 0; j < k; ++j) layers_.emplace_back(n);
    bucket_.assign(k + 1, 0);
    if (prune_) {
        if (!(prune_->rho_minus > 0) || prune_->rho_minus > prune_->rho_plus)
            throw Error("layered packing: bad prune interval");
        if (!(prune_->m_hat > 1)) throw Error("layered packing: prune needs m_hat");
        prune_from_layer_ = static_cast<int>(std::ceil(
            prune_->consts.c_prune * prune_->rho_plus * std::log(prune_->m_hat)));
        membership_bound_ =
            prune_from_layer_ +
            2 * static_cast<long long>(std::ceil(prune_->consts.c_load * k_ /
                                                 prune_->rho_minus)) +
            4;
    } else {
        membership_bound_ = k_;
    }
}

LayeredPacking::EdgeInfo& LayeredPacking::info(EdgeId e) {
    return infos_[static_cast<std::size_t>(e)];
}

LayeredPacking::EdgeInfo& LayeredPacking::info_checked(EdgeId e) {
    if (e < 0 || e >= static_cast<EdgeId>(infos_.size()) ||
        !infos_[static_cast<std::size_t>(e)].alive)
        throw UnknownEdgeId("layered packing: unknown edge " + std::to_string(e));
    return infos_[static_cast<std::size_t>(e)];
}

bool LayeredPacking::has_edge(EdgeId e) const {
    return e >= 0 && e < static_cast<EdgeId>(infos_.size()) &&
           infos_[static_cast<std::size_t>(e)].alive;
}

long long LayeredPacking::count_of(EdgeId e) const {
    return info_checked_const(e).count;
}
bool LayeredPacking::is_active(EdgeId e) const {
    return info_checked_const(e).active;
}

std::vector<EdgeId> LayeredPacking::edge_ids() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(infos_.size()); ++e)
        if (infos_[static_cast<std::size_t>(e)].alive) out.push_back(e);
    return out;
}

void LayeredPacking::bucket_add(long long c) {
    ++bucket_[static_cast<std::size_t>(c)];
    if (c < min_count_cache_) min_count_cache_ = c;
}

void LayeredPacking::bucket_remove(long long c) {
    --bucket_[static_cast<std::size_t>(c)];
}

void LayeredPacking::note_membership_change(EdgeId g, int delta, int layer,
                                            std::vector<std::pair<EdgeId, int>>& next,
                                            RecourseReport& rep) {
    EdgeInfo& gi = info(g);
    if (gi.active) bucket_remove(gi.count);
    gi.count += delta;
    if (gi.active) bucket_add(gi.count);
    if (prune_ && layer < prune_from_layer_) gi.prefix_count += delta;
    if (gi.count > max_count_seen_) max_count_seen_ = gi.count;
    ++rep.swaps;
    ++total_swaps_;
    if (!rep.per_layer.empty() && rep.per_layer.back().first == layer)
        ++rep.per_layer.back().second;
    else
        rep.per_layer.push_back({layer, 1});
    next.push_back({g, delta});
}

RecourseReport LayeredPacking::lp_insert(EdgeId e, Vertex u, Vertex v) {
    if (has_edge(e)) throw DuplicateEdgeId("layered packing: edge id in use");
    if (e < 0) throw UnknownEdgeId("layered packing: negative edge id");
    if (e >= static_cast<EdgeId>(infos_.size())) infos_.resize(e + 1);
    EdgeInfo& ei = info(e);
    ei = EdgeInfo{};
    ei.u = u;
    ei.v = v;
    ei.alive = true;
    ++active_edges_;

    RecourseReport rep;
    std::vector<std::pair<EdgeId, int>> current, next;
    long long e_members = 0;
    for (int j = 0; j < k_; ++j) {
        for (auto [g, d] : current) {
            if (!layers_[j].has_edge(g)) continue;  // pruned out of high layers
            auto swap = layers_[j].pf_reweight(g, layers_[j].edge_weight(g) + d);
            next.push_back({g, d});
            if (swap.out) note_membership_change(*swap.out, -1, j, next, rep);
            if (swap.in) note_membership_change(*swap.in, +1, j, next, rep);
        }
        auto kicked = layers_[j].pf_insert(e, u, v, e_members);
        if (kicked) note_membership_change(*kicked, -1, j, next, rep);
        if (layers_[j].contains(e)) {
            ++e_members;
            if (prune_ && j < prune_from_layer_) ++ei.prefix_count;
            ++rep.swaps;
            ++total_swaps_;
        }
        current.swap(next);
        next.clear();
    }
    ei.count = e_members;
    bucket_add(e_members);
    if (e_members > max_count_seen_) max_count_seen_ = e_members;

    if (prune_) apply_prune_rule(rep);
    ++updates_;
    log_update("insert", rep);
    return rep;
}

RecourseReport LayeredPacking::lp_delete(EdgeId e) {
    EdgeInfo& ei = info_checked(e);
    RecourseReport rep;
    std::vector<std::pair<EdgeId, int>> current, next;
    for (int j = 0; j < k_; ++j) {
        for (auto [g, d] : current) {
            if (!layers_[j].has_edge(g)) continue;
            auto swap = layers_[j].pf_reweight(g, layers_[j].edge_weight(g) + d);
            next.push_back({g, d});
            if (swap.out) note_membership_change(*swap.out, -1, j, next, rep);
            if (swap.in) note_membership_change(*swap.in, +1, j, next, rep);
        }
        if (layers_[j].has_edge(e)) {
            bool was_in = layers_[j].contains(e);
            auto repl = layers_[j].pf_delete(e);
            if (was_in) {
                ++rep.swaps;
                ++total_swaps_;
            }
            if (repl) note_membership_change(*repl, +1, j, next, rep);
        }
        current.swap(next);
        next.clear();
    }
    if (ei.active) {
        bucket_remove(ei.count);
        --active_edges_;
    }
    ei.alive = false;

    if (prune_) apply_prune_rule(rep);
    ++updates_;
    log_update("delete", rep);
    return rep;
}

void LayeredPacking::apply_prune_rule(RecourseReport& rep) {
    if (prune_from_layer_ >= k_) return;  // gate never opens at this k
    // The mask is a function of the membership prefix below the gate layer:
    // those layers never exclude anybody, so the statistic is unaffected by
    // the masking itself and the fixpoint is reached in one sweep.
    for (EdgeId e = 0; e < static_cast<EdgeId>(infos_.size()); ++e) {
        EdgeInfo& ei = info(e);
        if (!ei.alive) continue;
        bool over = static_cast<double>(ei.prefix_count) * prune_->rho_minus >
                    prune_->consts.c_load * static_cast<double>(prune_from_layer_);
        if (over && ei.active) {
            bucket_remove(ei.count);
            ei.active = false;
            --active_edges_;
            // drop the edge from the gated layers, cascading repairs
            std::vector<std::pair<EdgeId, int>> current, next;
            for (int j = prune_from_layer_; j < k_; ++j) {
                for (auto [g, d] : current) {
                    if (!layers_[j].has_edge(g)) continue;
                    auto swap =
                        layers_[j].pf_reweight(g, layers_[j].edge_weight(g) + d);
                    next.push_back({g, d});
                    if (swap.out) note_membership_change(*swap.out, -1, j, next, rep);
                    if (swap.in) note_membership_change(*swap.in, +1, j, next, rep);
                }
                if (layers_[j].has_edge(e)) {
                    bool was_in = layers_[j].contains(e);
                    auto repl = layers_[j].pf_delete(e);
                    if (was_in) {
                        --ei.count;
                        ++rep.swaps;
                        ++total_swaps_;
                    }
                    if (repl) note_membership_change(*repl, +1, j, next, rep);
                }
                current.swap(next);
                next.clear();
            }
        } else if (!over && !ei.active) {
            // load dropped: re-admit into the gated layers
            ei.active = true;
            ++active_edges_;
            long long members = ei.prefix_count;
            std::vector<std::pair<EdgeId, int>> current, next;
            for (int j = prune_from_layer_; j < k_; ++j) {
                for (auto [g, d] : current) {
                    if (!layers_[j].has_edge(g)) continue;
                    auto swap =
                        layers_[j].pf_reweight(g, layers_[j].edge_weight(g) + d);
                    next.push_back({g, d});
                    if (swap.out) note_membership_change(*swap.out, -1, j, next, rep);
                    if (swap.in) note_membership_change(*swap.in, +1, j, next, rep);
                }
                auto kicked = layers_[j].pf_insert(e, ei.u, ei.v, members);
                if (kicked) note_membership_change(*kicked, -1, j, next, rep);
                if (layers_[j].contains(e)) {
                    ++members;
                    ++ei.count;
                    ++rep.swaps;
                    ++total_swaps_;
                }
                current.swap(next);
                next.clear();
            }
            bucket_add(ei.count);
            if (ei.count > max_count_seen_) max_count_seen_ = ei.count;
        }
    }
}

LayeredPacking::MinCount LayeredPacking::lp_min_count() const {
    if (active_edges_ == 0)
        throw EmptyActiveSet("layered packing: no active edges");
    while (bucket_[static_cast<std::size_t>(min_count_cache_)] == 0) ++min_count_cache_;
    for (EdgeId e = 0; e < static_cast<EdgeId>(infos_.size()); ++e) {
        const EdgeInfo& ei = infos_[static_cast<std::size_t>(e)];
        if (ei.alive && ei.active && ei.count == min_count_cache_)
            return {min_count_cache_, e};
    }
    throw InternalError("layered packing: bucket index out of sync");
}

void LayeredPacking::log_update(const char* op, const RecourseReport& rep) {
    if (!log_enabled_) return;
    std::ostringstream line;
    line << updates_ - 1 << ',' << op << ',' << rep.swaps << ',';
    for (std::size_t i = 0; i < rep.per_layer.size(); ++i) {
        if (i) line << '|';
        line << rep.per_layer[i].first << ':' << rep.per_layer[i].second;
    }
    line << '\n';
    recourse_log_ += line.str();
}

void LayeredPacking::validate() {
    long long active_seen = 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(infos_.size()); ++e) {
        EdgeInfo& ei = info(e);
        if (!ei.alive) continue;
        long long c = 0;
        for (int j = 0; j < k_; ++j)
            if (layers_[j].has_edge(e) && layers_[j].contains(e)) ++c;
        if (c != ei.count) throw InternalError("layered packing: count drifted");
        if (ei.active) ++active_seen;
        // layer weights must equal the prefix membership counts
        long long prefix = 0;
        for (int j = 0; j < k_; ++j) {
            if (layers_[j].has_edge(e) &&
                layers_[j].edge_weight(e) != prefix)
                throw InternalError("layered packing: stale layer weight");
            if (layers_[j].has_edge(e) && layers_[j].contains(e)) ++prefix;
        }
    }
    if (active_seen != active_edges_)
        throw InternalError("layered packing: active count drifted");
    for (int j = 0; j < k_; ++j) layers_[j].validate();
}

}  // namespace basepack
