#include "basepack/dyn_forest.hpp"

#include <algorithm>
#include <string>

namespace basepack {

DynForest::DynForest(int n) : n_(n) {
    lct_.resize(n);
    for (int v = 0; v < n; ++v) {
        lct_[v].is_edge = false;
        lct_[v].key = kNegInf;
        lct_[v].pmax = kNegInf;
        lct_[v].pmax_node = -1;
    }
    ett_.resize(n);
    loop_.resize(n);
    for (int v = 0; v < n; ++v) {
        loop_[v] = v;
        ett_[v].is_loop = true;
        ett_[v].owner = v;
        ett_update(v);
    }
}

// ---------------------------------------------------------------- LCT ----

bool DynForest::lct_is_root(int x) const {
    int p = lct_[x].par;
    return p == -1 || (lct_[p].ch[0] != x && lct_[p].ch[1] != x);
}

void DynForest::lct_push(int x) {
    if (!lct_[x].flip) return;
    std::swap(lct_[x].ch[0], lct_[x].ch[1]);
    for (int c : lct_[x].ch)
        if (c != -1) lct_[c].flip = !lct_[c].flip;
    lct_[x].flip = false;
}

void DynForest::lct_update(int x) {
    LctNode& nx = lct_[x];
    if (nx.is_edge) {
        nx.pmax = nx.key;
        nx.pmax_node = x;
    } else {
        nx.pmax = kNegInf;
        nx.pmax_node = -1;
    }
    for (int c : nx.ch) {
        if (c == -1) continue;
        const LctNode& nc = lct_[c];
        if (nc.pmax_node == -1) continue;
        if (nx.pmax_node == -1 || nx.pmax < nc.pmax ||
            (nx.pmax == nc.pmax && lct_[nx.pmax_node].owner < lct_[nc.pmax_node].owner)) {
            nx.pmax = nc.pmax;
            nx.pmax_node = nc.pmax_node;
        }
    }
}

void DynForest::lct_rotate(int x) {
    ++work_;
    int y = lct_[x].par;
    int z = lct_[y].par;
    bool y_root = lct_is_root(y);
    int dx = (lct_[y].ch[1] == x);
    int sub = lct_[x].ch[!dx];
    if (!y_root) lct_[z].ch[lct_[z].ch[1] == y] = x;
    lct_[x].par = z;
    lct_[x].ch[!dx] = y;
    lct_[y].par = x;
    lct_[y].ch[dx] = sub;
    if (sub != -1) lct_[sub].par = y;
    lct_update(y);
    lct_update(x);
}

void DynForest::lct_splay(int x) {
    static thread_local std::vector<int> stack;
    stack.clear();
    int cur = x;
    stack.push_back(cur);
    while (!lct_is_root(cur)) {
        cur = lct_[cur].par;
        stack.push_back(cur);
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) lct_push(*it);

    while (!lct_is_root(x)) {
        int y = lct_[x].par;
        if (!lct_is_root(y)) {
            if ((lct_[lct_[y].par].ch[1] == y) == (lct_[y].ch[1] == x))
                lct_rotate(y);
            else
                lct_rotate(x);
        }
        lct_rotate(x);
    }
}

void DynForest::lct_access(int x) {
    lct_splay(x);
    if (lct_[x].ch[1] != -1) {
        lct_[x].ch[1] = -1;  // old preferred child keeps its par pointer (light)
        lct_update(x);
    }
    while (lct_[x].par != -1) {
        int y = lct_[x].par;
        lct_splay(y);
        lct_[y].ch[1] = x;
        lct_update(y);
        lct_splay(x);
    }
}

void DynForest::lct_evert(int x) {
    lct_access(x);
    lct_[x].flip = !lct_[x].flip;
    lct_push(x);
}

// ---------------------------------------------------------------- ETT ----

void DynForest::ett_update(int x) {
    EttNode& nx = ett_[x];
    nx.has_min_edge = false;
    nx.min_edge_node = -1;
    nx.has_min_vert = false;
    nx.min_vert_node = -1;
    nx.loop_cnt = nx.is_loop ? 1 : 0;
    if (nx.is_primary && nx.has_key) {
        nx.has_min_edge = true;
        nx.min_edge = nx.key;
        nx.min_edge_node = x;
    }
    if (nx.is_loop && nx.has_key) {
        nx.has_min_vert = true;
        nx.min_vert = nx.key;
        nx.min_vert_node = x;
    }
    for (int c : nx.ch) {
        if (c == -1) continue;
        const EttNode& nc = ett_[c];
        nx.loop_cnt += nc.loop_cnt;
        if (nc.has_min_edge &&
            (!nx.has_min_edge || nc.min_edge < nx.min_edge ||
             (nc.min_edge == nx.min_edge &&
              ett_[nc.min_edge_node].owner < ett_[nx.min_edge_node].owner))) {
            nx.has_min_edge = true;
            nx.min_edge = nc.min_edge;
            nx.min_edge_node = nc.min_edge_node;
        }
        if (nc.has_min_vert &&
            (!nx.has_min_vert || nc.min_vert < nx.min_vert ||
             (nc.min_vert == nx.min_vert &&
              ett_[nc.min_vert_node].owner < ett_[nx.min_vert_node].owner))) {
            nx.has_min_vert = true;
            nx.min_vert = nc.min_vert;
            nx.min_vert_node = nc.min_vert_node;
        }
    }
}

void DynForest::ett_rotate(int x) {
    ++work_;
    int y = ett_[x].par;
    int z = ett_[y].par;
    int dx = (ett_[y].ch[1] == x);
    int sub = ett_[x].ch[!dx];
    if (z != -1) ett_[z].ch[ett_[z].ch[1] == y] = x;
    ett_[x].par = z;
    ett_[x].ch[!dx] = y;
    ett_[y].par = x;
    ett_[y].ch[dx] = sub;
    if (sub != -1) ett_[sub].par = y;
    ett_update(y);
    ett_update(x);
}

void DynForest::ett_splay(int x) {
    while (ett_[x].par != -1) {
        int y = ett_[x].par;
        int z = ett_[y].par;
        if (z != -1) {
            if ((ett_[z].ch[1] == y) == (ett_[y].ch[1] == x))
                ett_rotate(y);
            else
                ett_rotate(x);
        }
        ett_rotate(x);
    }
}

int DynForest::ett_split_before(int x) {
    ett_splay(x);
    int left = ett_[x].ch[0];
    if (left != -1) {
        ett_[left].par = -1;
        ett_[x].ch[0] = -1;
        ett_update(x);
    }
    return left;
}

int DynForest::ett_split_after(int x) {
    ett_splay(x);
    int right = ett_[x].ch[1];
    if (right != -1) {
        ett_[right].par = -1;
        ett_[x].ch[1] = -1;
        ett_update(x);
    }
    return right;
}

int DynForest::ett_join(int a, int b) {
    if (a == -1) return b;
    if (b == -1) return a;
    ett_splay(a);
    while (ett_[a].ch[1] != -1) a = ett_[a].ch[1];
    ett_splay(a);
    ett_[a].ch[1] = b;
    ett_[b].par = a;
    ett_update(a);
    return a;
}

void DynForest::ett_reroot_tour(int v) {
    int l = loop_[v];
    int left = ett_split_before(l);
    if (left != -1) ett_join(l, left);
}

bool DynForest::ett_precedes(int a, int b) {
    ett_splay(a);
    ett_splay(b);
    int cur = a;
    int prev = a;
    while (ett_[cur].par != -1) {
        prev = cur;
        cur = ett_[cur].par;
    }
    if (cur != b) throw InternalError("ett_precedes: nodes in different tours");
    return ett_[b].ch[0] == prev;
}

int DynForest::ett_alloc() {
    if (!ett_free_.empty()) {
        int x = ett_free_.back();
        ett_free_.pop_back();
        ett_[x] = EttNode{};
        return x;
    }
    ett_.emplace_back();
    return static_cast<int>(ett_.size()) - 1;
}

void DynForest::ett_free(int x) {
    ett_free_.push_back(x);
}

// ------------------------------------------------------------- facade ----

bool DynForest::connected(int u, int v) {
    if (u == v) return true;
    int lu = loop_[u];
    int lv = loop_[v];
    ett_splay(lu);
    ett_splay(lv);
    return ett_[lu].par != -1;
}

TreeId DynForest::tree_id_internal(int v) {
    int l = loop_[v];
    ett_splay(l);
    if (!ett_[l].has_min_edge) return -static_cast<TreeId>(v) - 1;
    return ett_[ett_[l].min_edge_node].owner;
}

TreeId DynForest::tree_id(int v) {
    if (v < 0 || v >= n_) throw VertexOutOfRange("tree_id: node out of range");
    return tree_id_internal(v);
}

EdgeHandle DynForest::link(int u, int v, WeightKey w) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw VertexOutOfRange("link: node out of range");
    if (connected(u, v)) throw WouldCreateCycle("link would close a cycle");

    std::optional<long long> pu, pv;
    if (!payload_.empty()) {
        auto iu = payload_.find(tree_id_internal(u));
        if (iu != payload_.end()) {
            pu = iu->second;
            payload_.erase(iu);
        }
        auto iv = payload_.find(tree_id_internal(v));
        if (iv != payload_.end()) {
            pv = iv->second;
            payload_.erase(iv);
        }
        if (pu && pv) throw InternalError("link: both trees carry a payload");
    }

    int h = static_cast<int>(edges_.size());
    edges_.emplace_back();
    EdgeRec& rec = edges_[h];
    rec.u = u;
    rec.v = v;
    rec.key = w;
    rec.alive = true;

    // link-cut: u - x - v with a fresh edge node x
    int x;
    if (!lct_free_.empty()) {
        x = lct_free_.back();
        lct_free_.pop_back();
        lct_[x] = LctNode{};
    } else {
        lct_.emplace_back();
        x = static_cast<int>(lct_.size()) - 1;
    }
    lct_[x].is_edge = true;
    lct_[x].key = w;
    lct_[x].owner = h;
    lct_update(x);
    rec.lct = x;

    lct_evert(u);
    lct_[u].par = x;
    lct_evert(x);
    lct_[x].par = v;

    // Euler tour: tour(u) ++ [c1] ++ tour(v) ++ [c2]
    int c1 = ett_alloc();
    int c2 = ett_alloc();
    ett_[c1].is_primary = true;
    ett_[c1].has_key = true;
    ett_[c1].key = w;
    ett_[c1].owner = h;
    ett_update(c1);
    ett_[c2].owner = h;
    ett_update(c2);
    rec.c1 = c1;
    rec.c2 = c2;

    ett_reroot_tour(u);
    ett_reroot_tour(v);
    ett_splay(loop_[u]);
    int tu = loop_[u];
    ett_splay(loop_[v]);
    int tv = loop_[v];
    ett_join(ett_join(ett_join(tu, c1), tv), c2);

    if (pu || pv) payload_[tree_id_internal(u)] = pu ? *pu : *pv;
    return h;
}

void DynForest::cut(EdgeHandle e) {
    if (!edge_alive(e)) throw UnknownEdge("cut: unknown edge handle");
    EdgeRec& rec = edges_[e];
    int u = rec.u, v = rec.v;

    std::optional<long long> p;
    if (!payload_.empty()) {
        auto it = payload_.find(tree_id_internal(u));
        if (it != payload_.end()) {
            p = it->second;
            payload_.erase(it);
        }
    }

    // link-cut: detach u - x, then x - v
    int x = rec.lct;
    lct_evert(u);
    lct_access(x);
    if (lct_[x].ch[0] != u) throw InternalError("cut: unexpected splay shape");
    lct_[u].par = -1;
    lct_[x].ch[0] = -1;
    lct_update(x);
    lct_evert(x);
    lct_access(v);
    if (lct_[v].ch[0] != x) throw InternalError("cut: unexpected splay shape");
    lct_[x].par = -1;
    lct_[v].ch[0] = -1;
    lct_update(v);
    lct_free_.push_back(x);

    // Euler tour: excise the segment strictly between the two copies
    int first = rec.c1, second = rec.c2;
    if (!ett_precedes(first, second)) std::swap(first, second);
    int before = ett_split_before(first);
    int after = ett_split_after(second);
    ett_split_after(first);  // drop `first`; the rest ends at `second`
    ett_splay(second);
    if (ett_[second].ch[0] == -1) throw InternalError("cut: empty tour segment");
    int mid = ett_[second].ch[0];
    ett_[mid].par = -1;
    ett_[second].ch[0] = -1;
    ett_update(second);
    ett_join(before, after);
    ett_free(rec.c1);
    ett_free(rec.c2);

    rec.alive = false;
    rec.lct = rec.c1 = rec.c2 = -1;

    if (p) {
        payload_[tree_id_internal(u)] = *p;
        payload_[tree_id_internal(v)] = *p;
    }
}

void DynForest::update_edge_key(EdgeHandle e, WeightKey w) {
    if (!edge_alive(e)) throw UnknownEdge("update_edge_key: unknown edge handle");
    EdgeRec& rec = edges_[e];

    std::optional<long long> p;
    if (!payload_.empty()) {
        auto it = payload_.find(tree_id_internal(rec.u));
        if (it != payload_.end()) {
            p = it->second;
            payload_.erase(it);
        }
    }

    rec.key = w;
    lct_access(rec.lct);
    lct_[rec.lct].key = w;
    lct_update(rec.lct);
    ett_splay(rec.c1);
    ett_[rec.c1].key = w;
    ett_update(rec.c1);

    if (p) payload_[tree_id_internal(rec.u)] = *p;
}

EdgeHandle DynForest::path_max(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw VertexOutOfRange("path_max: node out of range");
    if (u == v) throw SameNode("path_max: endpoints coincide");
    if (!connected(u, v)) throw NotConnected("path_max: nodes not connected");
    lct_evert(u);
    lct_access(v);
    int node = lct_[v].pmax_node;
    if (node == -1) throw InternalError("path_max: no edge on path");
    return lct_[node].owner;
}

std::optional<EdgeHandle> DynForest::tree_min(int v) {
    if (v < 0 || v >= n_) throw VertexOutOfRange("tree_min: node out of range");
    int l = loop_[v];
    ett_splay(l);
    if (!ett_[l].has_min_edge) return std::nullopt;
    return ett_[ett_[l].min_edge_node].owner;
}

int DynForest::tree_size(int v) {
    if (v < 0 || v >= n_) throw VertexOutOfRange("tree_size: node out of range");
    int l = loop_[v];
    ett_splay(l);
    return ett_[l].loop_cnt;
}

void DynForest::set_vertex_key(int v, std::optional<WeightKey> w) {
    if (v < 0 || v >= n_) throw VertexOutOfRange("set_vertex_key: node out of range");
    int l = loop_[v];
    ett_splay(l);
    ett_[l].has_key = w.has_value();
    if (w) ett_[l].key = *w;
    ett_update(l);
}

std::optional<WeightKey> DynForest::vertex_key(int v) const {
    const EttNode& l = ett_[loop_[v]];
    if (!l.has_key) return std::nullopt;
    return l.key;
}

std::optional<int> DynForest::tree_min_vertex(int v) {
    if (v < 0 || v >= n_) throw VertexOutOfRange("tree_min_vertex: node out of range");
    int l = loop_[v];
    ett_splay(l);
    if (!ett_[l].has_min_vert) return std::nullopt;
    return ett_[ett_[l].min_vert_node].owner;
}

void DynForest::set_tree_payload(int v, long long value) {
    payload_[tree_id_internal(v)] = value;
}

std::optional<long long> DynForest::tree_payload(int v) {
    auto it = payload_.find(tree_id_internal(v));
    if (it == payload_.end()) return std::nullopt;
    return it->second;
}

void DynForest::clear_tree_payload(int v) {
    payload_.erase(tree_id_internal(v));
}

WeightKey DynForest::edge_key(EdgeHandle e) const {
    if (!edge_alive(e)) throw UnknownEdge("edge_key: unknown edge handle");
    return edges_[e].key;
}

std::pair<int, int> DynForest::edge_endpoints(EdgeHandle e) const {
    if (!edge_alive(e)) throw UnknownEdge("edge_endpoints: unknown edge handle");
    return {edges_[e].u, edges_[e].v};
}

}  // namespace basepack
