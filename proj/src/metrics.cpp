#include "fvbv/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "fvbv/quadrature.hpp"

namespace fvbv {

double bv_l1y_bvx(const DiscreteField2D& f) {
    const auto& g = *f.grid;
    double s = 0.0;
    for (int j = 0; j < g.ny(); ++j) {
        double tv = 0.0;
        for (int i = 1; i < g.nx(); ++i) tv += std::abs(f.at(i, j) - f.at(i - 1, j));
        s += g.hy[j] * tv;
    }
    return s;
}

double bv_l1x_bvy(const DiscreteField2D& f) {
    const auto& g = *f.grid;
    double s = 0.0;
    for (int i = 0; i < g.nx(); ++i) {
        double tv = 0.0;
        for (int j = 1; j < g.ny(); ++j) tv += std::abs(f.at(i, j) - f.at(i, j - 1));
        s += g.kx[i] * tv;
    }
    return s;
}

double bv_xy(const DiscreteField2D& f) { return bv_l1y_bvx(f) + bv_l1x_bvy(f); }

double bv_xy(const std::vector<double>& values, const std::vector<double>& kx,
             const std::vector<double>& hy) {
    const int nx = static_cast<int>(kx.size()), ny = static_cast<int>(hy.size());
    double s = 0.0;
    for (int j = 0; j < ny; ++j)
        for (int i = 1; i < nx; ++i) s += hy[j] * std::abs(values[i + nx * j] - values[i - 1 + nx * j]);
    for (int i = 0; i < nx; ++i)
        for (int j = 1; j < ny; ++j) s += kx[i] * std::abs(values[i + nx * j] - values[i + nx * (j - 1)]);
    return s;
}

double bv_time(const std::vector<DiscreteField2D>& snapshots) {
    if (snapshots.size() < 2) return 0.0;
    const auto& g = *snapshots.front().grid;
    double s = 0.0;
    for (std::size_t n = 1; n < snapshots.size(); ++n)
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i)
                s += g.cell_area(i, j) * std::abs(snapshots[n].at(i, j) - snapshots[n - 1].at(i, j));
    return s;
}

double bv_xyz(const DiscreteField3D& f) {
    const auto& g = *f.grid;
    double s = 0.0;
    for (int m = 0; m < g.nz(); ++m)
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 1; i < g.nx(); ++i)
                s += g.hy[j] * g.lz[m] * std::abs(f.at(i, j, m) - f.at(i - 1, j, m));
    for (int m = 0; m < g.nz(); ++m)
        for (int i = 0; i < g.nx(); ++i)
            for (int j = 1; j < g.ny(); ++j)
                s += g.kx[i] * g.lz[m] * std::abs(f.at(i, j, m) - f.at(i, j - 1, m));
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            for (int m = 1; m < g.nz(); ++m)
                s += g.kx[i] * g.hy[j] * std::abs(f.at(i, j, m) - f.at(i, j, m - 1));
    return s;
}

double bv_poly(const PolyField& f) {
    const auto& mesh = *f.mesh;
    double s = 0.0;
    for (const PolyEdge& e : mesh.edges)
        if (!e.is_boundary())
            s += e.length * std::abs(f.values[e.cell_left] - f.values[e.cell_right]);
    return s;
}

double total_mass(const DiscreteField2D& f) {
    const auto& g = *f.grid;
    double s = 0.0;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) s += g.cell_area(i, j) * f.at(i, j);
    return s;
}

double total_mass(const DiscreteField3D& f) {
    const auto& g = *f.grid;
    double s = 0.0;
    for (int m = 0; m < g.nz(); ++m)
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i) s += g.cell_volume(i, j, m) * f.at(i, j, m);
    return s;
}

double total_mass(const PolyField& f) {
    double s = 0.0;
    for (int c = 0; c < f.mesh->n_cells(); ++c) s += f.mesh->areas[c] * f.values[c];
    return s;
}

ErrorNorms error_norms(const DiscreteField2D& f, const ScalarFn3& exact, double t) {
    const auto& g = *f.grid;
    ErrorNorms n;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            const double ex = quad::avg2([&](double x, double y) { return exact(t, x, y); },
                                         g.x_edges[i], g.x_edges[i + 1], g.y_edges[j], g.y_edges[j + 1]);
            const double e = f.at(i, j) - ex;
            const double area = g.cell_area(i, j);
            n.linf = std::max(n.linf, std::abs(e));
            n.l1 += area * std::abs(e);
            n.l2 += area * e * e;
        }
    n.l2 = std::sqrt(n.l2);
    return n;
}

namespace {

// degree-2 rule on the centroid fan: per triangle the three edge midpoints
double polygon_average(const PolygonalMesh& mesh, int c, const ScalarFn2& fn) {
    const auto& loop = mesh.cells[c];
    const auto& ctr = mesh.centroids[c];
    double sum = 0.0, area = 0.0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const auto& p = mesh.vertices[loop[i]];
        const auto& q = mesh.vertices[loop[(i + 1) % loop.size()]];
        const double a2 = 0.5 * ((p[0] - ctr[0]) * (q[1] - ctr[1]) - (q[0] - ctr[0]) * (p[1] - ctr[1]));
        const double m01x = 0.5 * (p[0] + q[0]), m01y = 0.5 * (p[1] + q[1]);
        const double m0cx = 0.5 * (p[0] + ctr[0]), m0cy = 0.5 * (p[1] + ctr[1]);
        const double m1cx = 0.5 * (q[0] + ctr[0]), m1cy = 0.5 * (q[1] + ctr[1]);
        sum += a2 * (fn(m01x, m01y) + fn(m0cx, m0cy) + fn(m1cx, m1cy)) / 3.0;
        area += a2;
    }
    return sum / area;
}

}  // namespace

ErrorNorms error_norms(const PolyField& f, const ScalarFn3& exact, double t) {
    const auto& mesh = *f.mesh;
    ErrorNorms n;
    for (int c = 0; c < mesh.n_cells(); ++c) {
        const double ex = polygon_average(mesh, c, [&](double x, double y) { return exact(t, x, y); });
        const double e = f.values[c] - ex;
        n.linf = std::max(n.linf, std::abs(e));
        n.l1 += mesh.areas[c] * std::abs(e);
        n.l2 += mesh.areas[c] * e * e;
    }
    n.l2 = std::sqrt(n.l2);
    return n;
}

std::optional<double> rate(double v_fine, double v_coarse, double h_fine, double h_coarse) {
    if (!(v_fine > 0.0) || !(v_coarse > 0.0)) return std::nullopt;
    if (h_fine == h_coarse) return std::nullopt;
    return std::log(v_fine / v_coarse) / std::log(h_fine / h_coarse);
}

NormReport report(const DiscreteField2D& f, const ScalarFn3& exact, double t) {
    NormReport r;
    if (exact) r.error = error_norms(f, exact, t);
    r.bv = bv_xy(f);
    r.mass = total_mass(f);
    r.time = t;
    return r;
}

}  // namespace fvbv
