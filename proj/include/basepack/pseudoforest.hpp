#ifndef BASEPACK_PSEUDOFOREST_HPP
#define BASEPACK_PSEUDOFOREST_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "basepack/dyn_forest.hpp"
#include "basepack/errors.hpp"
#include "basepack/graph.hpp"

namespace basepack {

// Minimum-weight maximal pseudoforest of a dynamic multigraph, maintained in
// O(log n) time per edge insertion, deletion or reweight.
//
// Each component of the pseudoforest P with a cycle designates one cycle
// edge e_C, kept as the payload of its tree T_C = C - e_C inside a dynamic
// forest D. Edges outside P wait in per-vertex candidate queues whose minima
// are mirrored into per-vertex keys of D, so the cheapest replacement
// candidate of a component is one tree-minimum query away. Every comparison
// uses the strict key (weight, edge id).
class Pseudoforest {
  public:
    struct Swap {
        std::optional<EdgeId> out;  // edge that left P
        std::optional<EdgeId> in;   // edge that entered P
    };

    enum class Direction { UtoV, VtoU };

    struct Summary {
        bool is_forest;
        int largest_component;
        long long total_weight;
    };

    explicit Pseudoforest(int n);

    int vertex_count() const { return n_; }

    // Inserts a fresh edge; returns the edge swapped out of P, if any.
    std::optional<EdgeId> pf_insert(EdgeId e, Vertex u, Vertex v, long long w);

    // Deletes an edge; returns the replacement pulled into P, if any.
    std::optional<EdgeId> pf_delete(EdgeId e);

    // Changes an edge's weight in place; reports the net membership swap.
    Swap pf_reweight(EdgeId e, long long w);

    // Direction of e under the canonical orientation of P: cycles follow the
    // orientation bit stored with e_C, other edges point toward their
    // component's cycle; acyclic components point toward the root (the lower
    // endpoint of the component's minimum-key edge).
    Direction pf_orient(EdgeId e);

    Summary pf_summary() const;

    bool has_edge(EdgeId e) const;
    bool contains(EdgeId e) const;  // e in P?
    long long edge_weight(EdgeId e) const;
    std::pair<Vertex, Vertex> endpoints(EdgeId e) const;
    std::vector<EdgeId> pf_edges() const;  // edges of P, ascending ids
    int graph_edge_count() const { return live_edges_; }
    long long total_weight() const { return total_weight_; }

    // Full consistency sweep for tests: maximality, queue/key coherence,
    // cycle bookkeeping, weight accounting.
    void validate();

  private:
    enum class Status : unsigned char { Queued, InTree, CycleEdge };

    struct EdgeRec {
        Vertex u = -1, v = -1;
        long long w = 0;
        EdgeHandle tree_handle = -1;  // while status == InTree
        Status status = Status::Queued;
        bool oriented_u_to_v = true;  // cycle direction while status == CycleEdge
        bool alive = false;
    };

    EdgeRec& rec(EdgeId e);
    const EdgeRec& rec_checked(EdgeId e) const;
    WeightKey key_of(EdgeId e) const;

    void queue_add(EdgeId e);
    void queue_remove(EdgeId e);
    void refresh_vertex_key(Vertex v);
    std::optional<EdgeId> best_candidate_at(Vertex v);

    std::optional<EdgeId> cycle_edge_at(Vertex v);
    // Max key over the tree path from w to its component's cycle plus the
    // cycle itself; the component must be cyclic.
    std::pair<WeightKey, EdgeId> circuit_side_max(Vertex w, EdgeId cycle_edge);

    void link_tree_edge(EdgeId e);
    void cut_tree_edge(EdgeId e);

    // P + e must be independent; e must not sit in the queues.
    void add_to_p(EdgeId e);
    // Structural removal from P (no replacement search). Returns the vertex
    // at which a replacement search must run, or nullopt when the component
    // was acyclic (nothing can replace e).
    std::optional<Vertex> remove_from_p(EdgeId e);
    std::optional<EdgeId> try_swap_in(EdgeId e);

    int n_;
    DynForest d_;
    std::vector<std::set<std::pair<long long, EdgeId>>> queues_;
    std::vector<EdgeRec> recs_;  // indexed by EdgeId (ids are dense)
    long long total_weight_ = 0;
    int cyclic_components_ = 0;
    int live_edges_ = 0;
    std::vector<int> size_count_;  // component size -> multiplicity
    mutable int largest_hint_ = 1;
};

}  // namespace basepack

#endif
