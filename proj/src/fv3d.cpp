#include "fvbv/fv3d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fvbv/quadrature.hpp"

namespace fvbv {

DiscreteField3D project_initial_3d(const std::function<double(double, double, double)>& a0,
                                   std::shared_ptr<const CartesianGrid3D> grid) {
    DiscreteField3D f;
    f.grid = std::move(grid);
    const auto& g = *f.grid;
    f.values.resize(static_cast<std::size_t>(g.nx()) * g.ny() * g.nz());
    for (int m = 0; m < g.nz(); ++m)
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i)
                f.at(i, j, m) =
                    quad::avg3([&](double x, double y, double z) { return a0(x, y, z); },
                               g.x_edges[i], g.x_edges[i + 1], g.y_edges[j], g.y_edges[j + 1],
                               g.z_edges[m], g.z_edges[m + 1]);
    return f;
}

double cfl_3d(const CartesianGrid3D& grid, double lip_g, double u_sup) {
    if (u_sup == 0.0 || lip_g == 0.0) return std::numeric_limits<double>::infinity();
    double inv = 0.0;
    for (double k : grid.kx)
        for (double h : grid.hy)
            for (double l : grid.lz) inv = std::max(inv, 1.0 / k + 1.0 / h + 1.0 / l);
    return 1.0 / (4.0 * inv * lip_g * u_sup);
}

namespace {

// time/face average of one velocity component over an axis-normal face
template <class Fn>
double face_avg(Fn&& comp, double t0, double t1, double a0, double a1, double b0, double b1) {
    // averages comp(t, s, r) over the window and the face rectangle
    const double mt = 0.5 * (t0 + t1), ht = 0.5 * (t1 - t0);
    const double ma = 0.5 * (a0 + a1), ha = 0.5 * (a1 - a0);
    const double mb = 0.5 * (b0 + b1), hb = 0.5 * (b1 - b0);
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                s += quad::wts[i] * quad::wts[j] * quad::wts[k] *
                     comp(mt + ht * quad::pts[i], ma + ha * quad::pts[j], mb + hb * quad::pts[k]);
    return 0.125 * s;
}

}  // namespace

DiscreteField3D step3d(const DiscreteField3D& state, const SchemeConfig3D& cfg, double t0,
                       double t1) {
    const auto& g = *state.grid;
    const int nx = g.nx(), ny = g.ny(), nz = g.nz();
    const double delta = t1 - t0;
    const double dmax = cfl_3d(g, cfg.g.lipschitz, cfg.velocity.sup_bound);
    if (delta > dmax * (1.0 + 1e-9)) throw CflError("fv3d: step exceeds CFL bound");

    auto flux = [&](double vel, double left, double right) {
        return std::max(vel, 0.0) * cfg.g.eval(left, right) -
               std::max(-vel, 0.0) * cfg.g.eval(right, left);
    };

    DiscreteField3D out;
    out.grid = state.grid;
    out.time = t1;
    out.values = state.values;

    // x-direction faces (interior only: u.n = 0 on the boundary)
    for (int m = 0; m < nz; ++m)
        for (int j = 0; j < ny; ++j)
            for (int i = 1; i < nx; ++i) {
                const double u = face_avg(
                    [&](double t, double y, double z) { return cfg.velocity.u(t, g.x_edges[i], y, z); },
                    t0, t1, g.y_edges[j], g.y_edges[j + 1], g.z_edges[m], g.z_edges[m + 1]);
                const double F = flux(u, state.at(i - 1, j, m), state.at(i, j, m));
                out.at(i - 1, j, m) -= delta / g.kx[i - 1] * F;
                out.at(i, j, m) += delta / g.kx[i] * F;
            }
    for (int m = 0; m < nz; ++m)
        for (int j = 1; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const double v = face_avg(
                    [&](double t, double x, double z) { return cfg.velocity.v(t, x, g.y_edges[j], z); },
                    t0, t1, g.x_edges[i], g.x_edges[i + 1], g.z_edges[m], g.z_edges[m + 1]);
                const double F = flux(v, state.at(i, j - 1, m), state.at(i, j, m));
                out.at(i, j - 1, m) -= delta / g.hy[j - 1] * F;
                out.at(i, j, m) += delta / g.hy[j] * F;
            }
    for (int m = 1; m < nz; ++m)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const double w = face_avg(
                    [&](double t, double x, double y) { return cfg.velocity.w(t, x, y, g.z_edges[m]); },
                    t0, t1, g.x_edges[i], g.x_edges[i + 1], g.y_edges[j], g.y_edges[j + 1]);
                const double F = flux(w, state.at(i, j, m - 1), state.at(i, j, m));
                out.at(i, j, m - 1) -= delta / g.lz[m - 1] * F;
                out.at(i, j, m) += delta / g.lz[m] * F;
            }
    return out;
}

}  // namespace fvbv
