#include "basepack/density.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "basepack/packing.hpp"

namespace basepack {

namespace {

EstimatorConfig validated(EstimatorConfig cfg) {
    if (!(cfg.eps > 0.0) || cfg.eps > 1.0)
        throw Error("density: eps must lie in (0, 1]");
    if (cfg.rho_max < 1.0) throw Error("density: rho_max must be at least 1");
    if (!(cfg.m_hat > 1.0)) throw Error("density: m_hat must exceed 1");
    return cfg;
}

int runs_needed(double rho_max) {
    return static_cast<int>(std::ceil(std::log2(std::max(1.0, rho_max)))) + 2;
}

int run_layers(const EstimatorConfig& cfg, double rho_i) {
    return static_cast<int>(std::ceil(cfg.consts.c_k * rho_i * std::log(cfg.m_hat) /
                                      (cfg.eps * cfg.eps)));
}

}  // namespace

MultiScaleEstimator::MultiScaleEstimator(int n, EstimatorConfig cfg)
    : n_(n),
      cfg_(validated(cfg)),
      coarse_(n, std::max(1, static_cast<int>(std::ceil(
                                 cfg_.coarse_c * cfg_.rho_max * std::log(cfg_.m_hat))))) {
    int r = runs_needed(cfg_.rho_max);
    runs_.reserve(r);
    for (int i = 1; i <= r; ++i) {
        double rho_i = std::ldexp(1.0, i - 1);  // 2^(i-1)
        LayeredPacking::PruneConfig prune{rho_i, 4.0 * rho_i, cfg.m_hat, cfg.consts};
        runs_.emplace_back(n, run_layers(cfg, rho_i), prune);
    }
}

void MultiScaleEstimator::insert(EdgeId e, Vertex u, Vertex v) {
    coarse_.lp_insert(e, u, v);
    for (auto& run : runs_) run.lp_insert(e, u, v);
}

void MultiScaleEstimator::erase(EdgeId e) {
    coarse_.lp_delete(e);
    for (auto& run : runs_) run.lp_delete(e);
}

void MultiScaleEstimator::apply(const UpdateEvent& ev, EdgeId assigned_id) {
    switch (ev.kind) {
        case UpdateEvent::Kind::Insert:
            insert(assigned_id, ev.u, ev.v);
            break;
        case UpdateEvent::Kind::Delete:
            erase(*ev.id);
            break;
        default:
            throw Error("density: only structural events are applied");
    }
}

DensityEstimate MultiScaleEstimator::query() const {
    DensityEstimate out{};
    auto summary = coarse_.layer(0).pf_summary();
    if (summary.is_forest) {
        int n_big = summary.largest_component;
        double value = n_big <= 1 ? 0.0
                                  : static_cast<double>(n_big - 1) / n_big;
        out.estimate = out.low = out.high = value;
        out.is_forest = true;
        out.selected_scale = 0;
        out.reliable = true;
        return out;
    }

    auto mc = coarse_.lp_min_count();
    double rho_hat = mc.count == 0
                         ? std::numeric_limits<double>::infinity()
                         : static_cast<double>(coarse_.layer_count()) / mc.count;
    out.reliable = rho_hat <= cfg_.rho_max;

    double bracket_low = rho_hat / 1.5;
    int i = static_cast<int>(std::floor(std::log2(std::max(bracket_low, 1.0)))) + 1;
    i = std::max(1, std::min(i, static_cast<int>(runs_.size())));
    const LayeredPacking& run = runs_[i - 1];
    auto rmc = run.lp_min_count();
    double value = rmc.count == 0
                       ? std::numeric_limits<double>::infinity()
                       : static_cast<double>(run.layer_count()) / rmc.count;
    out.estimate = value;
    out.is_forest = false;
    out.selected_scale = i;
    if (out.reliable) {
        out.low = value / (1.0 + cfg_.eps);
        out.high = value;
    } else {
        out.low = value / 2.0;
        out.high = std::numeric_limits<double>::infinity();
    }
    return out;
}

long long MultiScaleEstimator::total_swaps() const {
    long long total = coarse_.total_swaps();
    for (const auto& run : runs_) total += run.total_swaps();
    return total;
}

double single_scale_estimate(const Graph& g, double eps, double rho_max,
                             PackingConstants consts) {
    if (!(eps > 0.0) || eps > 1.0) throw Error("density: eps must lie in (0, 1]");
    if (g.edge_count() == 0) throw EmptyGraph("density: empty graph");

    // forest fallback: largest component size N gives (N-1)/N
    detail::ForestUF uf(g.vertex_count());
    bool forest = true;
    for (const auto& [id, ep] : g.edges()) {
        if (uf.can_add(ep.u, ep.v))
            uf.add(ep.u, ep.v);
        else
            forest = false;
    }
    if (forest) {
        std::vector<int> size(g.vertex_count(), 0);
        int best = 1;
        for (int v = 0; v < g.vertex_count(); ++v)
            best = std::max(best, ++size[uf.find(v)]);
        return best <= 1 ? 0.0 : static_cast<double>(best - 1) / best;
    }

    int k = static_cast<int>(
        std::ceil(consts.c_k * rho_max * std::log(static_cast<double>(g.edge_count())) /
                  (eps * eps)));
    auto st = pack(g, MatroidKind::Bicircular, std::max(1, k));
    return st.min_load().estimate();
}

std::string density_report_row(long long op_index, const DensityEstimate& est) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(12);
    out << op_index << ',' << est.estimate << ',' << est.low << ',' << est.high << ','
        << (est.is_forest ? 1 : 0) << ',' << est.selected_scale;
    return out.str();
}

}  // namespace basepack
