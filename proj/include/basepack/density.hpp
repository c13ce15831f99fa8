#ifndef BASEPACK_DENSITY_HPP
#define BASEPACK_DENSITY_HPP

#include <optional>
#include <vector>

#include "basepack/graph.hpp"
#include "basepack/layered_packing.hpp"

namespace basepack {

struct EstimatorConfig {
    double eps;          // accuracy in (0, 1]
    double rho_max;      // known upper bound on the density, >= 1
    double m_hat;        // edge-count cap used to size the runs
    PackingConstants consts{};
    double coarse_c = 8.0;  // layers of the scale-selection run: c * rho_max * ln m_hat
};

struct DensityEstimate {
    double estimate;
    double low, high;     // claimed bracket for the true density
    bool is_forest;
    int selected_scale;   // 0 = forest fallback / coarse only
    bool reliable;        // false once the coarse estimate exceeds rho_max
};

// Fully dynamic (1 + eps)-approximate densest-subgraph density: one coarse
// unpruned packing picks the scale, r pruned packings with geometric
// intervals [2^(i-1), 2^(i+1)] hold the estimates.
class MultiScaleEstimator {
  public:
    MultiScaleEstimator(int n, EstimatorConfig cfg);

    int vertex_count() const { return n_; }
    int run_count() const { return static_cast<int>(runs_.size()); }
    int layer_count(int run) const { return runs_[run].layer_count(); }
    const EstimatorConfig& config() const { return cfg_; }

    void insert(EdgeId e, Vertex u, Vertex v);
    void erase(EdgeId e);
    // Structural events only; queries go through query().
    void apply(const UpdateEvent& ev, EdgeId assigned_id);

    DensityEstimate query() const;

    long long total_swaps() const;
    const LayeredPacking& coarse() const { return coarse_; }
    const LayeredPacking& run(int i) const { return runs_[i]; }

  private:
    int n_;
    EstimatorConfig cfg_;
    LayeredPacking coarse_;
    std::vector<LayeredPacking> runs_;  // run i at index i-1
};

// Static single-scale entry point: packs k = ceil(c_k rho_max ln m / eps^2)
// maximal pseudoforests of g and returns k / min-count, or the forest
// fallback (N-1)/N when g is acyclic.
double single_scale_estimate(const Graph& g, double eps, double rho_max,
                             PackingConstants consts = {});

// One CSV row of the query report: "op_index,estimate,low,high,is_forest,
// selected_scale".
std::string density_report_row(long long op_index, const DensityEstimate& est);

}  // namespace basepack

#endif
