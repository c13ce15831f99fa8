#ifndef BASEPACK_TEST_ORACLES_HPP
#define BASEPACK_TEST_ORACLES_HPP

// Reference computations for tests, kept independent of the library's
// incremental data structures: plain sorting, union-find and enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracles {

struct EdgeIn {
    long long id;
    int u, v;
    long long w = 0;
};

// Union-find over vertices with a per-component cycle flag.
class PseudoforestUF {
  public:
    explicit PseudoforestUF(int n) : parent_(n), cyclic_(n, false) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    // true if adding (u,v) keeps every component at most unicyclic
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
            cyclic_[rv] = cyclic_[ru] || cyclic_[rv];
        }
    }

  private:
    std::vector<int> parent_;
    std::vector<bool> cyclic_;
};

class ForestUF {
  public:
    explicit ForestUF(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool can_add(int u, int v) { return find(u) != find(v); }
    void add(int u, int v) { parent_[find(u)] = find(v); }

  private:
    std::vector<int> parent_;
};

// Kruskal-style greedy over the strict (weight, id) order.
inline std::set<long long> min_weight_maximal_pseudoforest(int n,
                                                           std::vector<EdgeIn> edges) {
    std::sort(edges.begin(), edges.end(), [](const EdgeIn& a, const EdgeIn& b) {
        if (a.w != b.w) return a.w < b.w;
        return a.id < b.id;
    });
    PseudoforestUF uf(n);
    std::set<long long> chosen;
    for (const auto& e : edges) {
        if (uf.can_add(e.u, e.v)) {
            uf.add(e.u, e.v);
            chosen.insert(e.id);
        }
    }
    return chosen;
}

inline std::set<long long> min_weight_spanning_forest(int n, std::vector<EdgeIn> edges) {
    std::sort(edges.begin(), edges.end(), [](const EdgeIn& a, const EdgeIn& b) {
        if (a.w != b.w) return a.w < b.w;
        return a.id < b.id;
    });
    ForestUF uf(n);
    std::set<long long> chosen;
    for (const auto& e : edges) {
        if (e.u != e.v && uf.can_add(e.u, e.v)) {
            uf.add(e.u, e.v);
            chosen.insert(e.id);
        }
    }
    return chosen;
}

// Exact densest-subgraph density max_S |E(S)|/|S| by subset enumeration.
// Returns {numerator, denominator} unreduced over the best subset; {0, 1}
// for an empty edge set.
inline std::pair<long long, long long> densest_subgraph_ratio(
    int n, const std::vector<EdgeIn>& edges) {
    std::pair<long long, long long> best{0, 1};
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        long long inside = 0;
        for (const auto& e : edges)
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++inside;
        long long size = __builtin_popcount(mask);
        if (inside * best.second > best.first * size) best = {inside, size};
    }
    return best;
}

// Fractional arboricity max_{|S|>1} |E(S)|/(|S|-1) by subset enumeration.
inline std::pair<long long, long long> fractional_arboricity_ratio(
    int n, const std::vector<EdgeIn>& edges) {
    std::pair<long long, long long> best{0, 1};
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        long long inside = 0;
        for (const auto& e : edges)
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++inside;
        long long denom = __builtin_popcount(mask) - 1;
        if (inside * best.second > best.first * denom) best = {inside, denom};
    }
    return best;
}

// Size of a maximum independent set (any greedy order works in a matroid).
inline int matroid_rank(int n, const std::vector<EdgeIn>& edges, bool graphic) {
    int r = 0;
    if (graphic) {
        ForestUF uf(n);
        for (const auto& e : edges)
            if (e.u != e.v && uf.can_add(e.u, e.v)) {
                uf.add(e.u, e.v);
                ++r;
            }
    } else {
        PseudoforestUF uf(n);
        for (const auto& e : edges)
            if (uf.can_add(e.u, e.v)) {
                uf.add(e.u, e.v);
                ++r;
            }
    }
    return r;
}

// All bases by subset enumeration; m must stay small.
inline std::vector<std::vector<int>> enumerate_bases(int n,
                                                     const std::vector<EdgeIn>& edges,
                                                     bool graphic) {
    int m = static_cast<int>(edges.size());
    int r = matroid_rank(n, edges, graphic);
    std::vector<std::vector<int>> bases;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != r) continue;
        bool ok = true;
        if (graphic) {
            ForestUF uf(n);
            for (int i = 0; i < m && ok; ++i)
                if (mask >> i & 1) {
                    if (edges[i].u != edges[i].v && uf.can_add(edges[i].u, edges[i].v))
                        uf.add(edges[i].u, edges[i].v);
                    else
                        ok = false;
                }
        } else {
            PseudoforestUF uf(n);
            for (int i = 0; i < m && ok; ++i)
                if (mask >> i & 1) {
                    if (uf.can_add(edges[i].u, edges[i].v))
                        uf.add(edges[i].u, edges[i].v);
                    else
                        ok = false;
                }
        }
        if (!ok) continue;
        std::vector<int> b;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) b.push_back(i);
        bases.push_back(std::move(b));
    }
    return bases;
}

}  // namespace oracles

#endif
