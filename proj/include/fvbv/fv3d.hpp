#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "fvbv/fv2d.hpp"
#include "fvbv/mesh.hpp"
#include "fvbv/physics.hpp"

namespace fvbv {

struct DiscreteField3D {
    std::shared_ptr<const CartesianGrid3D> grid;
    std::vector<double> values;  ///< idx = i + nx*(j + ny*m)
    double time = 0.0;

    double& at(int i, int j, int m) { return values[i + grid->nx() * (j + grid->ny() * m)]; }
    double at(int i, int j, int m) const { return values[i + grid->nx() * (j + grid->ny() * m)]; }
};

struct SchemeConfig3D {
    NumericalFlux g;
    VelocityField3D velocity;
    double delta = 0.0;
};

DiscreteField3D project_initial_3d(const std::function<double(double, double, double)>& a0,
                                   std::shared_ptr<const CartesianGrid3D> grid);

/// 1/(4 max_ijm(1/k_i + 1/h_j + 1/l_m) Lip(g) |u|_sup); +inf for u_sup == 0.
double cfl_3d(const CartesianGrid3D& grid, double lip_g, double u_sup);

/// Three-direction explicit update with face/time-averaged velocities and
/// the u.n = 0 boundary closure. Throws CflError past the stability bound.
DiscreteField3D step3d(const DiscreteField3D& state, const SchemeConfig3D& cfg, double t0,
                       double t1);

}  // namespace fvbv
