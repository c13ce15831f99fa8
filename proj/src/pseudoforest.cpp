#include "basepack/pseudoforest.hpp"

#include <algorithm>
#include <string>

namespace basepack {

namespace {
constexpr EdgeId kMaxEdgeId = 1 << 24;
}

Pseudoforest::Pseudoforest(int n) : n_(n), d_(n), queues_(n) {
    size_count_.assign(n + 1, 0);
    if (n > 0) size_count_[1] = n;
}

Pseudoforest::EdgeRec& Pseudoforest::rec(EdgeId e) {
    return recs_[static_cast<std::size_t>(e)];
}

const Pseudoforest::EdgeRec& Pseudoforest::rec_checked(EdgeId e) const {
    if (e < 0 || e >= static_cast<EdgeId>(recs_.size()) ||
        !recs_[static_cast<std::size_t>(e)].alive)
        throw UnknownEdgeId("pseudoforest: no edge " + std::to_string(e));
    return recs_[static_cast<std::size_t>(e)];
}

WeightKey Pseudoforest::key_of(EdgeId e) const {
    const EdgeRec& r = recs_[static_cast<std::size_t>(e)];
    return {r.w, e};
}

bool Pseudoforest::has_edge(EdgeId e) const {
    return e >= 0 && e < static_cast<EdgeId>(recs_.size()) &&
           recs_[static_cast<std::size_t>(e)].alive;
}

bool Pseudoforest::contains(EdgeId e) const {
    return has_edge(e) && recs_[static_cast<std::size_t>(e)].status != Status::Queued;
}

long long Pseudoforest::edge_weight(EdgeId e) const { return rec_checked(e).w; }

std::pair<Vertex, Vertex> Pseudoforest::endpoints(EdgeId e) const {
    const EdgeRec& r = rec_checked(e);
    return {r.u, r.v};
}

std::vector<EdgeId> Pseudoforest::pf_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(recs_.size()); ++e) {
        const EdgeRec& r = recs_[static_cast<std::size_t>(e)];
        if (r.alive && r.status != Status::Queued) out.push_back(e);
    }
    return out;
}

// ------------------------------------------------------------- queues ----

void Pseudoforest::queue_add(EdgeId e) {
    EdgeRec& r = rec(e);
    r.status = Status::Queued;
    queues_[r.u].insert({r.w, e});
    refresh_vertex_key(r.u);
    if (r.v != r.u) {
        queues_[r.v].insert({r.w, e});
        refresh_vertex_key(r.v);
    }
}

void Pseudoforest::queue_remove(EdgeId e) {
    EdgeRec& r = rec(e);
    queues_[r.u].erase({r.w, e});
    refresh_vertex_key(r.u);
    if (r.v != r.u) {
        queues_[r.v].erase({r.w, e});
        refresh_vertex_key(r.v);
    }
}

void Pseudoforest::refresh_vertex_key(Vertex v) {
    if (queues_[v].empty()) {
        d_.set_vertex_key(v, std::nullopt);
    } else {
        auto [w, id] = *queues_[v].begin();
        d_.set_vertex_key(v, WeightKey{w, id});
    }
}

std::optional<EdgeId> Pseudoforest::best_candidate_at(Vertex v) {
    auto mv = d_.tree_min_vertex(v);
    if (!mv) return std::nullopt;
    const auto& q = queues_[*mv];
    if (q.empty()) throw InternalError("candidate key without queue entry");
    return q.begin()->second;
}

// -------------------------------------------------------- P structure ----

std::optional<EdgeId> Pseudoforest::cycle_edge_at(Vertex v) {
    auto p = d_.tree_payload(v);
    if (!p) return std::nullopt;
    return static_cast<EdgeId>(*p);
}

std::pair<WeightKey, EdgeId> Pseudoforest::circuit_side_max(Vertex w, EdgeId cycle_edge) {
    const EdgeRec& c = rec(cycle_edge);
    std::pair<WeightKey, EdgeId> best{key_of(cycle_edge), cycle_edge};
    auto consider = [&](EdgeHandle h) {
        WeightKey k = d_.edge_key(h);
        if (best.first < k) best = {k, static_cast<EdgeId>(k.tag)};
    };
    if (c.u != c.v) consider(d_.path_max(c.u, c.v));
    if (w != c.u) consider(d_.path_max(w, c.u));
    return best;
}

void Pseudoforest::link_tree_edge(EdgeId e) {
    EdgeRec& r = rec(e);
    int s1 = d_.tree_size(r.u);
    int s2 = d_.tree_size(r.v);
    --size_count_[s1];
    --size_count_[s2];
    ++size_count_[s1 + s2];
    if (s1 + s2 > largest_hint_) largest_hint_ = s1 + s2;
    r.tree_handle = d_.link(r.u, r.v, key_of(e));
    r.status = Status::InTree;
}

void Pseudoforest::cut_tree_edge(EdgeId e) {
    EdgeRec& r = rec(e);
    int s = d_.tree_size(r.u);
    d_.cut(r.tree_handle);
    r.tree_handle = -1;
    int s1 = d_.tree_size(r.u);
    --size_count_[s];
    ++size_count_[s1];
    ++size_count_[s - s1];
}

void Pseudoforest::add_to_p(EdgeId e) {
    EdgeRec& r = rec(e);
    if (r.u == r.v || d_.connected(r.u, r.v)) {
        // closes the unique cycle of an acyclic component
        d_.set_tree_payload(r.u, e);
        r.status = Status::CycleEdge;
        r.oriented_u_to_v = (r.u <= r.v);
        ++cyclic_components_;
    } else {
        link_tree_edge(e);
    }
    total_weight_ += r.w;
}

std::optional<Vertex> Pseudoforest::remove_from_p(EdgeId e) {
    EdgeRec& r = rec(e);
    total_weight_ -= r.w;
    if (r.status == Status::CycleEdge) {
        d_.clear_tree_payload(r.u);
        --cyclic_components_;
        return r.u;
    }
    auto ec = cycle_edge_at(r.u);
    Vertex eu = r.u, ev = r.v;
    cut_tree_edge(e);
    if (!ec) {
        // acyclic component: maximality says no candidate touches either half
        if (best_candidate_at(eu) || best_candidate_at(ev))
            throw InternalError("acyclic component with waiting candidates");
        return std::nullopt;
    }
    const EdgeRec& c = rec(*ec);
    if (d_.connected(c.u, c.v)) {
        // e hung off the cycle; the half without the cycle is the search side
        Vertex acyclic_side = d_.connected(eu, c.u) ? ev : eu;
        d_.clear_tree_payload(acyclic_side);
        return acyclic_side;
    }
    // e was on the cycle: e_C reconnects the halves as a plain tree edge
    d_.clear_tree_payload(c.u);
    d_.clear_tree_payload(c.v);
    --cyclic_components_;
    link_tree_edge(*ec);
    return eu;
}

// ----------------------------------------------------------- updates ----

std::optional<EdgeId> Pseudoforest::pf_insert(EdgeId e, Vertex u, Vertex v, long long w) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw VertexOutOfRange("pf_insert: vertex out of range");
    if (e < 0 || e >= kMaxEdgeId) throw TooLarge("pf_insert: edge id out of range");
    if (has_edge(e)) throw DuplicateEdgeId("pf_insert: edge id in use");
    if (e >= static_cast<EdgeId>(recs_.size())) recs_.resize(e + 1);
    EdgeRec& r = rec(e);
    r = EdgeRec{};
    r.u = u;
    r.v = v;
    r.w = w;
    r.alive = true;
    ++live_edges_;

    bool same_comp = (u == v) || d_.connected(u, v);
    auto cu = cycle_edge_at(u);
    auto cv = same_comp ? cu : cycle_edge_at(v);
    bool independent = same_comp ? !cu.has_value() : !(cu && cv);
    if (independent) {
        add_to_p(e);
        return std::nullopt;
    }

    // fundamental circuit of e: its own closing path, the resident cycles,
    // and the connector paths toward them
    std::pair<WeightKey, EdgeId> best{WeightKey{LLONG_MIN, LLONG_MIN}, -1};
    auto consider = [&](std::pair<WeightKey, EdgeId> cand) {
        if (best.second == -1 || best.first < cand.first) best = cand;
    };
    if (same_comp) {
        if (u != v) {
            WeightKey k = d_.edge_key(d_.path_max(u, v));
            consider({k, static_cast<EdgeId>(k.tag)});
        }
        consider(circuit_side_max(u, *cu));
    } else {
        consider(circuit_side_max(u, *cu));
        consider(circuit_side_max(v, *cv));
    }

    if (key_of(e) < best.first) {
        EdgeId out = best.second;
        remove_from_p(out);
        queue_add(out);
        add_to_p(e);
        return out;
    }
    queue_add(e);
    return std::nullopt;
}

std::optional<EdgeId> Pseudoforest::pf_delete(EdgeId e) {
    const EdgeRec& r = rec_checked(e);
    --live_edges_;
    if (r.status == Status::Queued) {
        queue_remove(e);
        rec(e).alive = false;
        return std::nullopt;
    }
    auto search_at = remove_from_p(e);
    rec(e).alive = false;
    if (!search_at) return std::nullopt;
    auto f = best_candidate_at(*search_at);
    if (!f) return std::nullopt;
    queue_remove(*f);
    add_to_p(*f);
    return f;
}

Pseudoforest::Swap Pseudoforest::pf_reweight(EdgeId e, long long w) {
    EdgeRec& r = const_cast<EdgeRec&>(rec_checked(e));
    if (w == r.w) return {};
    long long old_w = r.w;

    if (r.status == Status::Queued) {
        queue_remove(e);
        r.w = w;
        queue_add(e);
        if (w > old_w) return {};  // an already-losing edge only got worse
        auto out = try_swap_in(e);
        if (out) return {out, e};
        return {};
    }

    if (w < old_w) {  // cheaper members never leave the optimum
        r.w = w;
        total_weight_ += w - old_w;
        if (r.status == Status::InTree)
            d_.update_edge_key(r.tree_handle, key_of(e));
        return {};
    }

    // weight increase of a member: a swap needs a candidate in this
    // component that beats the new key
    auto cand = best_candidate_at(r.u);
    if (!cand || !(WeightKey{rec(*cand).w, *cand} < WeightKey{w, e})) {
        r.w = w;
        total_weight_ += w - old_w;
        if (r.status == Status::InTree)
            d_.update_edge_key(r.tree_handle, key_of(e));
        return {};
    }

    // full re-evaluation: remove, then re-offer e against the candidates
    Vertex u = r.u, v = r.v;
    auto came_in = pf_delete(e);
    auto went_out = pf_insert(e, u, v, w);
    bool in_after = contains(e);
    if (in_after) {
        if (came_in != went_out)
            throw InternalError("reweight: inconsistent delete/insert exchange");
        return {};
    }
    return {e, came_in};
}

// Entry check for an edge currently waiting in the queues: if its key beats
// the maximum of its fundamental circuit, perform the exchange.
std::optional<EdgeId> Pseudoforest::try_swap_in(EdgeId e) {
    EdgeRec& r = rec(e);
    bool same_comp = (r.u == r.v) || d_.connected(r.u, r.v);
    auto cu = cycle_edge_at(r.u);
    auto cv = same_comp ? cu : cycle_edge_at(r.v);
    if (same_comp ? !cu.has_value() : !(cu && cv))
        throw InternalError("try_swap_in: maximality violated");

    std::pair<WeightKey, EdgeId> best{WeightKey{LLONG_MIN, LLONG_MIN}, -1};
    auto consider = [&](std::pair<WeightKey, EdgeId> cand) {
        if (best.second == -1 || best.first < cand.first) best = cand;
    };
    if (same_comp) {
        if (r.u != r.v) {
            WeightKey k = d_.edge_key(d_.path_max(r.u, r.v));
            consider({k, static_cast<EdgeId>(k.tag)});
        }
        consider(circuit_side_max(r.u, *cu));
    } else {
        consider(circuit_side_max(r.u, *cu));
        consider(circuit_side_max(r.v, *cv));
    }
    if (!(key_of(e) < best.first)) return std::nullopt;
    EdgeId out = best.second;
    queue_remove(e);
    remove_from_p(out);
    queue_add(out);
    add_to_p(e);
    return out;
}

Pseudoforest::Direction Pseudoforest::pf_orient(EdgeId e) {
    const EdgeRec& r = rec_checked(e);
    if (r.status == Status::Queued)
        throw NotInPseudoforest("pf_orient: edge not in the pseudoforest");
    if (r.status == Status::CycleEdge)
        return r.oriented_u_to_v ? Direction::UtoV : Direction::VtoU;

    auto ec = cycle_edge_at(r.u);
    Direction dir;
    if (ec) {
        const EdgeRec& c = rec(*ec);
        Vertex tail_end = c.oriented_u_to_v ? c.u : c.v;  // cycle runs tail -> head
        Vertex head_end = c.oriented_u_to_v ? c.v : c.u;
        EdgeHandle h = rec(e).tree_handle;
        d_.cut(h);
        if (d_.connected(c.u, c.v)) {
            // e pointed toward the cycle
            bool u_on_cycle_side = d_.connected(r.u, c.u);
            dir = u_on_cycle_side ? Direction::VtoU : Direction::UtoV;
            d_.clear_tree_payload(u_on_cycle_side ? r.v : r.u);
        } else {
            // e lay on the cycle: follow the stored cycle direction,
            // which continues from the head of e_C back to its tail
            dir = d_.connected(r.u, head_end) ? Direction::UtoV : Direction::VtoU;
            d_.clear_tree_payload(tail_end);
        }
        rec(e).tree_handle = d_.link(r.u, r.v, key_of(e));
    } else {
        auto mn = d_.tree_min(r.u);
        if (!mn) throw InternalError("pf_orient: tree edge without tree minimum");
        auto [a, b] = d_.edge_endpoints(*mn);
        Vertex root = std::min(a, b);
        EdgeHandle h = rec(e).tree_handle;
        d_.cut(h);
        dir = d_.connected(r.u, root) ? Direction::VtoU : Direction::UtoV;
        rec(e).tree_handle = d_.link(r.u, r.v, key_of(e));
    }
    return dir;
}

Pseudoforest::Summary Pseudoforest::pf_summary() const {
    while (largest_hint_ > 1 && size_count_[largest_hint_] == 0) --largest_hint_;
    int largest = n_ == 0 ? 0 : largest_hint_;
    return {cyclic_components_ == 0, largest, total_weight_};
}

// ---------------------------------------------------------- validate ----

void Pseudoforest::validate() {
    long long weight = 0;
    int cyclic = 0;
    std::vector<std::set<std::pair<long long, EdgeId>>> expect_queues(n_);
    for (EdgeId e = 0; e < static_cast<EdgeId>(recs_.size()); ++e) {
        EdgeRec& r = rec(e);
        if (!r.alive) continue;
        if (r.status == Status::Queued) {
            expect_queues[r.u].insert({r.w, e});
            expect_queues[r.v].insert({r.w, e});
            if (!cycle_edge_at(r.u) || !cycle_edge_at(r.v))
                throw InternalError("maximality: queued edge beside acyclic component");
        } else {
            weight += r.w;
            if (r.status == Status::CycleEdge) {
                ++cyclic;
                auto p = cycle_edge_at(r.u);
                if (!p || *p != e) throw InternalError("cycle payload mismatch");
                if (r.u != r.v && !d_.connected(r.u, r.v))
                    throw InternalError("cycle edge endpoints disconnected");
            }
        }
    }
    if (weight != total_weight_) throw InternalError("total weight drifted");
    if (cyclic != cyclic_components_) throw InternalError("cycle count drifted");
    for (Vertex v = 0; v < n_; ++v) {
        if (expect_queues[v] != queues_[v]) throw InternalError("queue contents drifted");
        auto k = d_.vertex_key(v);
        if (queues_[v].empty()) {
            if (k) throw InternalError("stale vertex key");
        } else {
            auto [w, id] = *queues_[v].begin();
            if (!k || !(*k == WeightKey{w, id}))
                throw InternalError("vertex key out of sync with queue");
        }
    }
    std::vector<int> sizes(n_ + 1, 0);
    std::vector<char> seen(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
        if (seen[v]) continue;
        ++sizes[d_.tree_size(v)];
        for (Vertex w = v; w < n_; ++w)
            if (!seen[w] && d_.connected(v, w)) seen[w] = 1;
    }
    if (sizes != size_count_) throw InternalError("component sizes drifted");
}

}  // namespace basepack
