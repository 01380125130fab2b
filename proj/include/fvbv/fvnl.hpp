#pragma once

#include <memory>

#include "fvbv/fv2d.hpp"
#include "fvbv/mesh.hpp"
#include "fvbv/physics.hpp"

namespace fvbv {

/// Explicit scheme for d_t alpha + div F(t,x,alpha) = S via the monotone
/// splitting F1 = a+b, F2 = c+d. Face fluxes are the split functions
/// integrated over the face and the step window (3-point Gauss each).
struct SplitScheme {
    SplitFunctions split;
    double lip_F = 0.0;
    ScalarFn3 source;  ///< null = homogeneous
    double delta = 0.0;
};

/// Theorem-style bound 1/(4 Lip(F) max_ij(1/k_i + 1/h_j)).
double cfl_nonlinear(const CartesianGrid2D& grid, double lip_F);

/// One step. The refusal check is the sharp convex-combination requirement
/// delta (Lip(F) + M) max_ij(1/k_i + 1/h_j) <= 1, which is what
/// monotonicity of the update actually needs (cfl_nonlinear is a factor
/// two stricter). Boundary faces mirror the interior state.
DiscreteField2D step_nonlinear(const DiscreteField2D& state, const SplitScheme& scheme, double t0,
                               double t1);

RunResult run_nonlinear(const DiscreteField2D& initial, const SplitScheme& scheme, double T);

}  // namespace fvbv
