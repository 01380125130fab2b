#include "fvbv/fvnl.hpp"

#include <algorithm>
#include <cmath>

#include "fvbv/metrics.hpp"
#include "fvbv/quadrature.hpp"

namespace fvbv {

double cfl_nonlinear(const CartesianGrid2D& grid, double lip_F) {
    double inv = 0.0;
    for (double k : grid.kx)
        for (double h : grid.hy) inv = std::max(inv, 1.0 / k + 1.0 / h);
    return 1.0 / (4.0 * lip_F * inv);
}

DiscreteField2D step_nonlinear(const DiscreteField2D& state, const SplitScheme& scheme, double t0,
                               double t1) {
    const auto& g = *state.grid;
    const int nx = g.nx(), ny = g.ny();
    const double delta = t1 - t0;
    double inv = 0.0;
    for (double k : g.kx)
        for (double h : g.hy) inv = std::max(inv, 1.0 / k + 1.0 / h);
    if (delta * (scheme.lip_F + scheme.split.M) * inv > 1.0 + 1e-9)
        throw CflError("fvnl: step violates the monotone-splitting bound");

    // per x-face flux integral a(left state) + b(right state); each split
    // integral is int_t avg_y of the split function (dimension delta)
    auto xface = [&](const ScalarFn4& fn, int i, int j, double s) {
        return delta * quad::avg2([&](double t, double y) { return fn(t, g.x_edges[i], y, s); }, t0,
                                  t1, g.y_edges[j], g.y_edges[j + 1]);
    };
    auto yface = [&](const ScalarFn4& fn, int i, int j, double s) {
        return delta * quad::avg2([&](double t, double x) { return fn(t, x, g.y_edges[j], s); }, t0,
                                  t1, g.x_edges[i], g.x_edges[i + 1]);
    };

    std::vector<double> FX(static_cast<std::size_t>(nx + 1) * ny);
    std::vector<double> FY(static_cast<std::size_t>(nx) * (ny + 1));
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i <= nx; ++i) {
            const double sl = state.at(std::max(i - 1, 0), j);       // mirror at the boundary
            const double sr = state.at(std::min(i, nx - 1), j);
            FX[i + (nx + 1) * j] = xface(scheme.split.a, i, j, sl) + xface(scheme.split.b, i, j, sr);
        }
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const double sb = state.at(i, std::max(j - 1, 0));
            const double st = state.at(i, std::min(j, ny - 1));
            FY[i + nx * j] = yface(scheme.split.c, i, j, sb) + yface(scheme.split.d, i, j, st);
        }

    DiscreteField2D out;
    out.grid = state.grid;
    out.time = t1;
    out.values.resize(state.values.size());
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            double v = state.at(i, j) - (FX[i + 1 + (nx + 1) * j] - FX[i + (nx + 1) * j]) / g.kx[i] -
                       (FY[i + nx * (j + 1)] - FY[i + nx * j]) / g.hy[j];
            if (scheme.source)
                v += delta * quad::avg3(scheme.source, t0, t1, g.x_edges[i], g.x_edges[i + 1],
                                        g.y_edges[j], g.y_edges[j + 1]);
            out.at(i, j) = v;
        }
    return out;
}

RunResult run_nonlinear(const DiscreteField2D& initial, const SplitScheme& scheme, double T) {
    RunResult r{initial, {}};
    const double span = T - initial.time;
    if (span <= 0.0 || scheme.delta <= 0.0) return r;
    const int N = static_cast<int>(std::ceil(span / scheme.delta - 1e-12));
    const double delta = span / N;
    r.trace.steps = N;
    r.trace.delta = delta;
    for (int n = 0; n < N; ++n) {
        const double t0 = initial.time + n * delta;
        DiscreteField2D next = step_nonlinear(r.final, scheme, t0, t0 + delta);
        double dsum = 0.0;
        const auto& g = *r.final.grid;
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i)
                dsum += g.cell_area(i, j) * std::abs(next.at(i, j) - r.final.at(i, j));
        r.trace.bv_time += dsum;
        r.final = std::move(next);
        r.trace.times.push_back(r.final.time);
        r.trace.bv.push_back(bv_xy(r.final));
        r.trace.mass.push_back(total_mass(r.final));
        double li = 0.0;
        for (double v : r.final.values) li = std::max(li, std::abs(v));
        r.trace.linf.push_back(li);
    }
    r.final.time = T;
    return r;
}

}  // namespace fvbv
