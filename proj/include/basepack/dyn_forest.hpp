#ifndef BASEPACK_DYN_FOREST_HPP
#define BASEPACK_DYN_FOREST_HPP

#include <climits>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "basepack/errors.hpp"

namespace basepack {

// Totally ordered edge key. Callers supply (weight, tag) — tag is typically
// a graph edge id so equal weights still compare strictly; any remaining tie
// is broken by the internal edge handle.
struct WeightKey {
    long long weight = 0;
    long long tag = 0;

    friend bool operator==(WeightKey a, WeightKey b) {
        return a.weight == b.weight && a.tag == b.tag;
    }
    friend bool operator<(WeightKey a, WeightKey b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.tag < b.tag;
    }
    friend bool operator<=(WeightKey a, WeightKey b) { return a < b || a == b; }
};

using EdgeHandle = int;

// Canonical tree identifier: the handle of the tree's minimum-key edge, or
// -(v+1) for the singleton tree {v}.
using TreeId = long long;

// Balanced dynamic forest with O(log n) amortized operations:
//   link / cut / tree_id / path_max / tree_min,
// plus per-tree vertex count, an optional per-vertex auxiliary key with a
// tree-minimum query, and one opaque payload slot per tree.
//
// Internally a splay link-cut tree serves path queries and a splay-based
// Euler-tour sequence serves whole-tree aggregates.
class DynForest {
  public:
    explicit DynForest(int n);

    int node_count() const { return n_; }

    // Connects distinct trees; the key must order strictly against other
    // live keys (ties fall back to handle order).
    EdgeHandle link(int u, int v, WeightKey w);

    void cut(EdgeHandle e);

    // In-place reweight of a live edge.
    void update_edge_key(EdgeHandle e, WeightKey w);

    bool connected(int u, int v);
    TreeId tree_id(int v);

    // Maximum-key edge on the u-v path.
    EdgeHandle path_max(int u, int v);

    // Minimum-key edge in v's tree; absent for a singleton.
    std::optional<EdgeHandle> tree_min(int v);

    int tree_size(int v);

    // Auxiliary per-vertex keys (absent = +infinity).
    void set_vertex_key(int v, std::optional<WeightKey> w);
    std::optional<WeightKey> vertex_key(int v) const;
    // Vertex attaining the minimum auxiliary key in v's tree, if any.
    std::optional<int> tree_min_vertex(int v);

    // Per-tree payload. On link the surviving tree inherits the payload of
    // whichever side carried one (both sides carrying is an error); on cut
    // both halves receive a copy and the caller corrects.
    void set_tree_payload(int v, long long value);
    std::optional<long long> tree_payload(int v);
    void clear_tree_payload(int v);

    bool edge_alive(EdgeHandle e) const {
        return e >= 0 && e < static_cast<int>(edges_.size()) && edges_[e].alive;
    }
    WeightKey edge_key(EdgeHandle e) const;
    std::pair<int, int> edge_endpoints(EdgeHandle e) const;

    // Rotation count across both internal structures (instrumentation for
    // empirical scaling checks).
    long long work_counter() const { return work_; }

  private:
    struct EdgeRec {
        int u = -1, v = -1;
        WeightKey key{};
        int lct = -1;      // link-cut node
        int c1 = -1;       // Euler-tour copy carrying the key
        int c2 = -1;       // twin copy
        bool alive = false;
    };

    // ---- link-cut tree over vertices and edge nodes ----
    struct LctNode {
        int ch[2] = {-1, -1};
        int par = -1;
        bool flip = false;
        bool is_edge = false;
        WeightKey key{};
        WeightKey pmax{};
        int pmax_node = -1;
        int owner = -1;  // edge handle for edge nodes
    };

    bool lct_is_root(int x) const;
    void lct_push(int x);
    void lct_update(int x);
    void lct_rotate(int x);
    void lct_splay(int x);
    void lct_access(int x);
    void lct_evert(int x);

    // ---- Euler-tour sequence (splay over tour occurrences) ----
    struct EttNode {
        int ch[2] = {-1, -1};
        int par = -1;
        bool is_loop = false;
        bool is_primary = false;  // edge occurrence carrying the key
        WeightKey key{};          // edge key / vertex aux key
        bool has_key = false;
        // subtree aggregates
        bool has_min_edge = false;
        WeightKey min_edge{};
        int min_edge_node = -1;
        bool has_min_vert = false;
        WeightKey min_vert{};
        int min_vert_node = -1;
        int loop_cnt = 0;
        int owner = -1;  // vertex for loops, edge handle for copies
    };

    void ett_update(int x);
    void ett_rotate(int x);
    void ett_splay(int x);
    // Splits the sequence rooted at x's tree right before x; returns the
    // left part's root (or -1) with x rooting the right part.
    int ett_split_before(int x);
    int ett_split_after(int x);
    int ett_join(int a, int b);
    void ett_reroot_tour(int v);
    bool ett_precedes(int a, int b);

    int ett_alloc();
    void ett_free(int x);

    TreeId tree_id_internal(int v);

    int n_;
    std::vector<LctNode> lct_;
    std::vector<int> lct_free_;
    std::vector<EttNode> ett_;
    std::vector<int> ett_free_;
    std::vector<int> loop_;           // vertex -> ETT loop node
    std::vector<EdgeRec> edges_;
    std::unordered_map<TreeId, long long> payload_;
    long long work_ = 0;

    static constexpr WeightKey kNegInf{LLONG_MIN, LLONG_MIN};
};

}  // namespace basepack

#endif
