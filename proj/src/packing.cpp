#include "basepack/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace basepack {

std::vector<EdgeId> min_weight_base(const Graph& g,
                                    const std::unordered_map<EdgeId, long long>& weights,
                                    MatroidKind kind) {
    std::vector<EdgeId> ids = g.edge_ids_sorted();
    std::stable_sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
        long long wa = weights.count(a) ? weights.at(a) : 0;
        long long wb = weights.count(b) ? weights.at(b) : 0;
        if (wa != wb) return wa < wb;
        return a < b;
    });
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(ids.size());
    for (EdgeId id : ids) {
        auto ep = g.endpoints(id);
        edges.emplace_back(ep.u, ep.v);
    }
    std::vector<EdgeId> base;
    for (std::size_t i : greedy_base_select(g.vertex_count(), kind, edges))
        base.push_back(ids[i]);
    return base;
}

PackingState::PackingState(const Graph& g, MatroidKind kind) : g_(&g), kind_(kind) {
    ids_ = g.edge_ids_sorted();
    counts_.assign(ids_.size(), 0);
    active_.assign(ids_.size(), 1);
    ends_.reserve(ids_.size());
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
        pos_[ids_[i]] = i;
        auto ep = g.endpoints(ids_[i]);
        ends_.push_back({ep.u, ep.v});
    }
    order_.resize(ids_.size());
    std::iota(order_.begin(), order_.end(), 0);
}

int PackingState::pos(EdgeId e) const {
    auto it = pos_.find(e);
    if (it == pos_.end()) throw UnknownEdgeId("packing: edge not in ground set");
    return it->second;
}

void PackingState::configure_prune(PruneInterval iv, PackingConstants consts) {
    if (!(iv.rho_minus > 0) || iv.rho_minus > iv.rho_plus)
        throw Error("packing: prune interval must satisfy 0 < rho- <= rho+");
    prune_ = iv;
    consts_ = consts;
    double m = static_cast<double>(ids_.size());
    prune_from_step_ =
        static_cast<int>(std::ceil(consts.c_prune * iv.rho_plus * std::log(m)));
}

void PackingState::step() {
    // order active edges by the strict (count, id) key
    order_.clear();
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i)
        if (active_[i]) order_.push_back(i);
    if (order_.empty()) throw EmptyActiveSet("packing: active set is empty");
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
        if (counts_[a] != counts_[b]) return counts_[a] < counts_[b];
        return ids_[a] < ids_[b];
    });

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(order_.size());
    for (int i : order_) edges.emplace_back(ends_[i]);
    std::vector<std::size_t> picked =
        greedy_base_select(g_->vertex_count(), kind_, edges);

    ++k_;
    if (retain_) {
        std::vector<EdgeId> ids;
        ids.reserve(picked.size());
        for (std::size_t p : picked) ids.push_back(ids_[order_[p]]);
        bases_.push_back(std::move(ids));
    }
    for (std::size_t p : picked) ++counts_[order_[p]];
    if (prune_ && k_ >= prune_from_step_) prune_now();
}

void PackingState::prune_now() {
    // drop edges with x^k_e > c_load / rho-  (i.e. c_e * rho- > c_load * k)
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
        if (!active_[i]) continue;
        if (static_cast<double>(counts_[i]) * prune_->rho_minus >
            consts_.c_load * static_cast<double>(k_))
            active_[i] = 0;
    }
}

PackingState::MinLoad PackingState::min_load() const {
    MinLoad out{k_, std::numeric_limits<long long>::max(), -1};
    bool any = false;
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
        if (!active_[i]) continue;
        any = true;
        if (counts_[i] < out.min_count) {
            out.min_count = counts_[i];
            out.witness = ids_[i];
        }
    }
    if (!any) throw EmptyActiveSet("packing: active set is empty");
    return out;
}

std::string PackingState::loads_csv() const {
    std::ostringstream out;
    out << "edge_id,count,k,load,active\n";
    out.setf(std::ios::fixed);
    out.precision(12);
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
        double load = k_ == 0 ? 0.0 : static_cast<double>(counts_[i]) / k_;
        out << ids_[i] << ',' << counts_[i] << ',' << k_ << ',' << load << ','
            << (active_[i] ? 1 : 0) << '\n';
    }
    return out.str();
}

PackingState pack(const Graph& g, MatroidKind kind, int k, bool retain_bases) {
    if (g.edge_count() == 0) throw EmptyGraph("pack: graph has no edges");
    PackingState st(g, kind);
    st.retain_bases(retain_bases);
    for (int i = 0; i < k; ++i) st.step();
    return st;
}

PackingState pack_pruned(const Graph& g, MatroidKind kind, int k, PruneInterval iv,
                         PackingConstants consts, bool retain_bases) {
    if (g.edge_count() == 0) throw EmptyGraph("pack_pruned: graph has no edges");
    PackingState st(g, kind);
    st.retain_bases(retain_bases);
    st.configure_prune(iv, consts);
    for (int i = 0; i < k; ++i) st.step();
    return st;
}

}  // namespace basepack
