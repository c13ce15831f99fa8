#ifndef BASEPACK_LAYERED_PACKING_HPP
#define BASEPACK_LAYERED_PACKING_HPP

#include <cstdint>
#include <string>
#include <optional>
#include <vector>

#include "basepack/packing.hpp"
#include "basepack/pseudoforest.hpp"

namespace basepack {

struct RecourseReport {
    long long swaps = 0;                            // membership changes
    std::vector<std::pair<int, int>> per_layer;     // (layer, changes) runs
};

// A stack of k minimum-weight maximal pseudoforests where layer j weighs
// each edge by its membership count among layers 0..j-1, maintained under
// edge insertion and deletion by cascading +-1 weight deltas upward.
class LayeredPacking {
  public:
    struct PruneConfig {
        double rho_minus;
        double rho_plus;
        double m_hat;  // edge-count cap used for the prune step gate
        PackingConstants consts{};
    };

    LayeredPacking(int n, int k, std::optional<PruneConfig> prune = std::nullopt);

    int vertex_count() const { return n_; }
    int layer_count() const { return k_; }

    RecourseReport lp_insert(EdgeId e, Vertex u, Vertex v);
    RecourseReport lp_delete(EdgeId e);

    struct MinCount {
        long long count;
        EdgeId witness;
    };
    // Minimum membership count over active edges.
    MinCount lp_min_count() const;

    long long count_of(EdgeId e) const;
    bool is_active(EdgeId e) const;
    bool has_edge(EdgeId e) const;
    int active_edge_count() const { return active_edges_; }

    const Pseudoforest& layer(int j) const { return layers_[j]; }
    Pseudoforest& layer_mut(int j) { return layers_[j]; }
    std::pair<Vertex, Vertex> endpoints(EdgeId e) const {
        const EdgeInfo& ei = info_checked_const(e);
        return {ei.u, ei.v};
    }
    std::vector<EdgeId> edge_ids() const;  // live edges, ascending

    // Membership bound instrumentation: the largest count any edge ever
    // reached, and the calibrated ceiling it is asserted against.
    long long max_count_seen() const { return max_count_seen_; }
    long long membership_bound() const { return membership_bound_; }

    long long total_swaps() const { return total_swaps_; }
    long long updates_applied() const { return updates_; }

    // CSV of per-update recourse: "update_index,op,swaps,per_layer_swaps".
    const std::string& recourse_log() const { return recourse_log_; }
    void enable_recourse_log(bool on) { log_enabled_ = on; }

    void validate();  // cross-checks counts against the layers

  private:
    struct EdgeInfo {
        Vertex u = -1, v = -1;
        long long count = 0;         // memberships across all layers
        long long prefix_count = 0;  // memberships below the prune gate layer
        bool active = true;          // pruning mask
        bool alive = false;
    };

    EdgeInfo& info(EdgeId e);
    EdgeInfo& info_checked(EdgeId e);
    const EdgeInfo& info_checked_const(EdgeId e) const {
        return const_cast<LayeredPacking*>(this)->info_checked(e);
    }

    void bucket_add(long long c);
    void bucket_remove(long long c);
    void note_membership_change(EdgeId e, int delta, int layer,
                                std::vector<std::pair<EdgeId, int>>& next,
                                RecourseReport& rep);
    void apply_prune_rule(RecourseReport& rep);
    void log_update(const char* op, const RecourseReport& rep);

    int n_;
    int k_;
    std::vector<Pseudoforest> layers_;
    std::vector<EdgeInfo> infos_;
    std::optional<PruneConfig> prune_;
    int prune_from_layer_ = 0;
    int active_edges_ = 0;
    std::vector<long long> bucket_;  // count value -> active edges at it
    mutable long long min_count_cache_ = 0;
    long long max_count_seen_ = 0;
    long long membership_bound_ = 0;
    long long total_swaps_ = 0;
    long long updates_ = 0;
    bool log_enabled_ = false;
    std::string recourse_log_;
};

}  // namespace basepack

#endif
