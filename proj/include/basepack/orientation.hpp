#ifndef BASEPACK_ORIENTATION_HPP
#define BASEPACK_ORIENTATION_HPP

#include <vector>

#include "basepack/layered_packing.hpp"
#include "basepack/rational.hpp"

namespace basepack {

// Fractional orientation of one edge induced by the layered packing: the
// average of the edge's direction over the layers that contain it.
struct EdgeOrientation {
    EdgeId id;
    Vertex u, v;
    Rational d_uv;
    Rational d_vu;
    long long coverage;  // number of layers containing the edge
};

EdgeOrientation orient_edge(LayeredPacking& lp, EdgeId e);

struct OutDegreeAudit {
    std::vector<Rational> outdeg;  // per vertex
    Rational max_outdeg;
    Vertex max_vertex;
    bool is_forest;  // the (1+eps)rho guarantee needs a cycle somewhere
};

// Orients every live edge and accumulates exact fractional out-degrees.
OutDegreeAudit outdeg_audit(LayeredPacking& lp);

// CLI response line: "id u v d_uv d_vu coverage".
std::string orientation_row(const EdgeOrientation& o);

}  // namespace basepack

#endif
