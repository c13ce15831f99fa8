#ifndef BASEPACK_GRAPH_HPP
#define BASEPACK_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "basepack/errors.hpp"

namespace basepack {

using EdgeId = std::int64_t;
using Vertex = int;

// Mutable multigraph on a fixed vertex set. Self-loops and parallel edges
// are allowed. EdgeIds are never reused: ids below next_edge_id() are spent
// whether or not the edge is still present.
class Graph {
  public:
    struct Endpoints {
        Vertex u;
        Vertex v;
    };

    Graph() : n_(0), next_id_(0) {}
    explicit Graph(int n) : n_(n), next_id_(0), adjacency_(n) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    EdgeId next_edge_id() const { return next_id_; }

    bool has_edge(EdgeId id) const { return edges_.count(id) != 0; }

    Endpoints endpoints(EdgeId id) const {
        auto it = edges_.find(id);
        if (it == edges_.end())
            throw UnknownEdgeId("no edge with id " + std::to_string(id));
        return it->second;
    }

    // Inserts (u,v); the id is auto-assigned unless given. An explicit id
    // must be fresh (ids are assigned by a monotone counter and never
    // reused, so anything below the counter is taken).
    EdgeId insert_edge(Vertex u, Vertex v, std::optional<EdgeId> id = std::nullopt);

    Endpoints delete_edge(EdgeId id);

    // Incident edge ids of v, in insertion order. A self-loop appears once.
    const std::vector<EdgeId>& incident(Vertex v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    const std::unordered_map<EdgeId, Endpoints>& edges() const { return edges_; }

    // Edge ids sorted ascending (stable iteration order for callers).
    std::vector<EdgeId> edge_ids_sorted() const;

  private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw VertexOutOfRange("vertex " + std::to_string(v) +
                                   " out of range [0," + std::to_string(n_) + ")");
    }

    int n_;
    EdgeId next_id_;
    std::unordered_map<EdgeId, Endpoints> edges_;
    std::vector<std::vector<EdgeId>> adjacency_;
};

struct UpdateEvent {
    enum class Kind { Insert, Delete, QueryDensity, QueryOrientation };
    Kind kind;
    Vertex u = -1;
    Vertex v = -1;
    std::optional<EdgeId> id;  // explicit id for Insert; target for Delete/QueryOrientation

    static UpdateEvent insert(Vertex u, Vertex v, std::optional<EdgeId> id = std::nullopt) {
        return {Kind::Insert, u, v, id};
    }
    static UpdateEvent erase(EdgeId id) { return {Kind::Delete, -1, -1, id}; }
    static UpdateEvent query_density() { return {Kind::QueryDensity, -1, -1, std::nullopt}; }
    static UpdateEvent query_orientation(EdgeId id) {
        return {Kind::QueryOrientation, -1, -1, id};
    }
};

struct ApplyResult {
    std::optional<EdgeId> id;  // assigned id on insert, removed id on delete
};

// Applies a structural event (Insert/Delete) to g. Query events are no-ops
// at the graph level; the caller routes them to an estimator.
ApplyResult apply_update(Graph& g, const UpdateEvent& ev);

// Graph file: first line "n m", then m lines "id u v".
Graph parse_graph_file(std::string_view text);
std::string to_graph_file(const Graph& g);

// Update stream: "+ u v" | "+ id u v" | "- id" | "? density" | "? orient id".
// '#' starts a comment line; blank lines are skipped.
std::vector<UpdateEvent> parse_update_stream(std::string_view text);

}  // namespace basepack

#endif
