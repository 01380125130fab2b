#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "fvbv/fv2d.hpp"
#include "fvbv/mesh.hpp"
#include "fvbv/physics.hpp"

namespace fvbv {

struct PolyField {
    std::shared_ptr<const PolygonalMesh> mesh;
    std::vector<double> values;  ///< one state per cell
    double time = 0.0;
};

struct PolySchemeConfig {
    NumericalFlux g;
    VelocityField velocity;
    ScalarFn3 source;  ///< null = homogeneous
    BoundaryClosure closure = BoundaryClosure::zero_flux;
    /// Ghost state just outside a boundary edge (used by exact_inflow).
    std::function<double(double, const PolyEdge&)> boundary_value;
    double delta = 0.0;
};

PolyField project_initial(const InitialData& a0, std::shared_ptr<const PolygonalMesh> mesh);

/// Sufficient bound 1/(4 max_K(perimeter/|K|) Lip(g) |u|_sup). The sharp
/// per-cell monotonicity check inside step_poly is weaker; marginal cases
/// (Courant number one) pass there.
double max_timestep_poly(const PolygonalMesh& mesh, double lip_g, double u_sup);

/// First-order monotone upwind update
///   a_K' = a_K - (delta/|K|) sum_e |e| [Ve+ g(a_K,a_L) - Ve- g(a_L,a_K)]
/// with Ve the time/edge-averaged outward normal velocity. Refuses to step
/// when some cell's outflow Courant sum delta/|K| sum_e |e| Ve+ Lip(g)
/// exceeds one.
PolyField step_poly(const PolyField& state, const PolySchemeConfig& cfg, double t0, double t1);

struct PolyRunResult {
    PolyField final;
    RunTrace trace;
};

PolyRunResult run_poly(const PolyField& initial, const PolySchemeConfig& cfg, double T);

}  // namespace fvbv
