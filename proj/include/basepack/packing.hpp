#ifndef BASEPACK_PACKING_HPP
#define BASEPACK_PACKING_HPP

#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "basepack/errors.hpp"
#include "basepack/graph.hpp"

namespace basepack {

enum class MatroidKind { Graphic, Bicircular };

// Threshold constants of the packing-with-pruning rule; exposed so
// experiments can vary them.
struct PackingConstants {
    double c_k = 20.0;     // iterations: c_k * rho * ln m / eps^2
    double c_prune = 24.0; // prune activates after c_prune * rho+ * ln m steps
    double c_load = 2.0;   // prune edges with load above c_load / rho-
};

struct PruneInterval {
    double rho_minus;
    double rho_plus;
};

namespace detail {

// Union-find acyclicity oracle (graphic matroid independence).
class ForestUF {
  public:
    explicit ForestUF(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool can_add(int u, int v) { return u != v && find(u) != find(v); }
    void add(int u, int v) { parent_[find(u)] = find(v); }

  private:
    std::vector<int> parent_;
};

// Union-find with cycle flags (bicircular matroid independence: every
// component of a pseudoforest carries at most one cycle).
class PseudoforestUF {
  public:
    explicit PseudoforestUF(int n) : parent_(n), cyclic_(n, false) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool can_add(int u, int v) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return !cyclic_[ru];
        return !(cyclic_[ru] && cyclic_[rv]);
    }
    void add(int u, int v) {
        int ru = find(u), rv = find(v);
        if (ru == rv) {
            cyclic_[ru] = true;
        } else {
            parent_[ru] = rv;
            cyclic_[rv] = cyclic_[rv] || cyclic_[ru];
        }
    }

  private:
    std::vector<int> parent_;
    std::vector<bool> cyclic_;
};

}  // namespace detail

// Greedy base selection over (u, v) pairs visited in the given order;
// returns the positions of the chosen edges within the range.
template <typename EndpointRange>
std::vector<std::size_t> greedy_base_select(int n, MatroidKind kind,
                                            const EndpointRange& edges) {
    std::vector<std::size_t> chosen;
    std::size_t i = 0;
    if (kind == MatroidKind::Graphic) {
        detail::ForestUF uf(n);
        for (const auto& [u, v] : edges) {
            if (uf.can_add(u, v)) {
                uf.add(u, v);
                chosen.push_back(i);
            }
            ++i;
        }
    } else {
        detail::PseudoforestUF uf(n);
        for (const auto& [u, v] : edges) {
            if (uf.can_add(u, v)) {
                uf.add(u, v);
                chosen.push_back(i);
            }
            ++i;
        }
    }
    return chosen;
}

// Minimum-weight base under strict (weight, id) keys.
std::vector<EdgeId> min_weight_base(const Graph& g,
                                    const std::unordered_map<EdgeId, long long>& weights,
                                    MatroidKind kind);

// State of a greedy base packing after k rounds: per-edge membership counts
// c_e (relative load x^k_e = c_e / k) and the active mask of the pruned
// ground set.
class PackingState {
  public:
    PackingState(const Graph& g, MatroidKind kind);

    MatroidKind kind() const { return kind_; }
    int k() const { return k_; }
    int edge_count() const { return static_cast<int>(ids_.size()); }
    const std::vector<EdgeId>& edge_ids() const { return ids_; }

    long long count_of(EdgeId e) const { return counts_[pos(e)]; }
    bool is_active(EdgeId e) const { return active_[pos(e)] != 0; }
    double load_of(EdgeId e) const {
        return k_ == 0 ? 0.0 : static_cast<double>(count_of(e)) / k_;
    }

    struct MinLoad {
        long long k;
        long long min_count;  // 0 means some active edge was never packed
        EdgeId witness;
        bool infinite() const { return min_count == 0; }
        double estimate() const {
            return min_count == 0 ? std::numeric_limits<double>::infinity()
                                  : static_cast<double>(k) / min_count;
        }
    };
    // Minimum membership count over active edges.
    MinLoad min_load() const;

    const std::vector<std::vector<EdgeId>>& bases() const { return bases_; }

    // One greedy round: packs the minimum-weight base under (count, id) keys
    // drawn from the active set, then applies the prune rule if configured.
    void step();

    void configure_prune(PruneInterval iv, PackingConstants consts);
    void retain_bases(bool on) { retain_ = on; }

    std::string loads_csv() const;

  private:
    int pos(EdgeId e) const;
    void prune_now();

    const Graph* g_;
    MatroidKind kind_;
    int k_ = 0;
    std::vector<EdgeId> ids_;
    std::unordered_map<EdgeId, int> pos_;
    std::vector<std::pair<Vertex, Vertex>> ends_;
    std::vector<long long> counts_;
    std::vector<char> active_;
    std::optional<PruneInterval> prune_;
    PackingConstants consts_;
    int prune_from_step_ = 0;
    bool retain_ = false;
    std::vector<std::vector<EdgeId>> bases_;
    std::vector<int> order_;  // scratch
};

PackingState pack(const Graph& g, MatroidKind kind, int k, bool retain_bases = false);

PackingState pack_pruned(const Graph& g, MatroidKind kind, int k, PruneInterval iv,
                         PackingConstants consts = {}, bool retain_bases = false);

}  // namespace basepack

#endif
