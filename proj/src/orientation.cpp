#include "basepack/orientation.hpp"

#include <sstream>

namespace basepack {

EdgeOrientation orient_edge(LayeredPacking& lp, EdgeId e) {
    if (!lp.has_edge(e)) throw UnknownEdgeId("orient_edge: unknown edge");
    long long coverage = lp.count_of(e);
    if (coverage == 0) throw UncoveredEdge("orient_edge: edge in no layer");
    auto [u, v] = lp.endpoints(e);
    long long toward_v = 0;
    for (int j = 0; j < lp.layer_count(); ++j) {
        auto& layer = lp.layer_mut(j);
        if (!layer.has_edge(e) || !layer.contains(e)) continue;
        if (layer.pf_orient(e) == Pseudoforest::Direction::UtoV) ++toward_v;
    }
    Rational d_uv = make_rational(toward_v, coverage);
    return {e, u, v, d_uv, Rational(1) - d_uv, coverage};
}

OutDegreeAudit outdeg_audit(LayeredPacking& lp) {
    OutDegreeAudit audit;
    audit.outdeg.assign(lp.vertex_count(), Rational(0));
    for (EdgeId e : lp.edge_ids()) {
        auto o = orient_edge(lp, e);
        if (o.u == o.v) {
            audit.outdeg[o.u] += 1;  // a loop always leaves its vertex
        } else {
            audit.outdeg[o.u] += o.d_uv;
            audit.outdeg[o.v] += o.d_vu;
        }
    }
    audit.max_outdeg = Rational(0);
    audit.max_vertex = 0;
    for (Vertex v = 0; v < lp.vertex_count(); ++v) {
        if (audit.outdeg[v] > audit.max_outdeg) {
            audit.max_outdeg = audit.outdeg[v];
            audit.max_vertex = v;
        }
    }
    audit.is_forest = lp.layer(0).pf_summary().is_forest;
    return audit;
}

std::string orientation_row(const EdgeOrientation& o) {
    std::ostringstream out;
    out << o.id << ' ' << o.u << ' ' << o.v << ' ' << rational_str(o.d_uv) << ' '
        << rational_str(o.d_vu) << ' ' << o.coverage;
    return out.str();
}

}  // namespace basepack
