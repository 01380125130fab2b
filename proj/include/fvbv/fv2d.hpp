#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "fvbv/mesh.hpp"
#include "fvbv/physics.hpp"

namespace fvbv {

/// Thrown when a step would violate the stability (CFL) restriction.
struct CflError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DiscreteField2D {
    std::shared_ptr<const CartesianGrid2D> grid;
    std::vector<double> values;  ///< idx = i + nx*j
    double time = 0.0;

    double& at(int i, int j) { return values[i + grid->nx() * j]; }
    double at(int i, int j) const { return values[i + grid->nx() * j]; }
};

enum class BoundaryClosure {
    zero_flux,     ///< u.n = 0 on the boundary: boundary-face fluxes vanish
    exact_inflow,  ///< ghost cells filled from a prescribed field
};

struct SchemeConfig {
    NumericalFlux g;
    FluxFunction f;
    VelocityField velocity;
    ScalarFn3 source;  ///< null = homogeneous
    BoundaryClosure closure = BoundaryClosure::zero_flux;
    /// Ghost-cell average for exact_inflow: (t, xlo, xhi, ylo, yhi).
    std::function<double(double, double, double, double, double)> ghost;
    double delta = 0.0;  ///< informational; steps take explicit (t0,t1)
};

/// Cell averages of a0; exact where the initial data provides a closed
/// form, 3-point Gauss otherwise.
DiscreteField2D project_initial(const InitialData& a0, std::shared_ptr<const CartesianGrid2D> grid);

/// Largest delta with 4 delta max_ij(1/k_i + 1/h_j) Lip(g) |u|_sup <= 1;
/// +infinity when u_sup == 0.
double max_timestep(const CartesianGrid2D& grid, double lip_g, double u_sup);

/// One explicit step in flux form. Throws CflError when (t1-t0) exceeds
/// max_timestep.
DiscreteField2D step(const DiscreteField2D& state, const SchemeConfig& cfg, double t0, double t1);

/// Same update written as a convex combination with the difference-quotient
/// coefficients; agrees with step() to roundoff.
DiscreteField2D step_convex(const DiscreteField2D& state, const SchemeConfig& cfg, double t0,
                            double t1);

struct RunTrace {
    std::vector<double> times;  ///< after each step
    std::vector<double> bv;    ///< BV_{x,y} seminorm after each step
    std::vector<double> linf;
    std::vector<double> mass;
    double bv_time = 0.0;  ///< accumulated sum_K |K| sum_n |a^{n+1}-a^n|
    int steps = 0;
    double delta = 0.0;  ///< actual step used (adjusted to divide T)
};

struct RunResult {
    DiscreteField2D final;
    RunTrace trace;
};

/// Runs from the field's time stamp to T with N = ceil((T-t0)/delta_req)
/// uniform steps (delta adjusted downward to land on T exactly).
RunResult run(const DiscreteField2D& initial, const SchemeConfig& cfg, double T);

}  // namespace fvbv
