#include "fvbv/fvpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fvbv/metrics.hpp"
#include "fvbv/quadrature.hpp"

namespace fvbv {

namespace {

// degree-2 centroid-fan rule, same as the metrics module uses
double polygon_average(const PolygonalMesh& mesh, int c, const ScalarFn2& fn) {
    const auto& loop = mesh.cells[c];
    const auto& ctr = mesh.centroids[c];
    double sum = 0.0, area = 0.0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const auto& p = mesh.vertices[loop[i]];
        const auto& q = mesh.vertices[loop[(i + 1) % loop.size()]];
        const double a2 = 0.5 * ((p[0] - ctr[0]) * (q[1] - ctr[1]) - (q[0] - ctr[0]) * (p[1] - ctr[1]));
        sum += a2 *
               (fn(0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1])) +
                fn(0.5 * (p[0] + ctr[0]), 0.5 * (p[1] + ctr[1])) +
                fn(0.5 * (q[0] + ctr[0]), 0.5 * (q[1] + ctr[1]))) /
               3.0;
        area += a2;
    }
    return sum / area;
}

}  // namespace

PolyField project_initial(const InitialData& a0, std::shared_ptr<const PolygonalMesh> mesh) {
    PolyField f;
    f.mesh = std::move(mesh);
    const auto& m = *f.mesh;
    f.values.resize(m.n_cells());
    for (int c = 0; c < m.n_cells(); ++c) {
        if (a0.rect_average && m.cell_is_axis_rect(c)) {
            const Rect r = m.cell_bbox(c);
            f.values[c] = a0.rect_average(r.xmin, r.xmax, r.ymin, r.ymax);
        } else {
            f.values[c] = polygon_average(m, c, a0.eval);
        }
    }
    return f;
}

double max_timestep_poly(const PolygonalMesh& mesh, double lip_g, double u_sup) {
    if (u_sup == 0.0 || lip_g == 0.0) return std::numeric_limits<double>::infinity();
    double ratio = 0.0;
    for (int c = 0; c < mesh.n_cells(); ++c) {
        double per = 0.0;
        for (int e : mesh.cell_edges[c]) per += mesh.edges[e].length;
        ratio = std::max(ratio, per / mesh.areas[c]);
    }
    return 1.0 / (4.0 * ratio * lip_g * u_sup);
}

PolyField step_poly(const PolyField& state, const PolySchemeConfig& cfg, double t0, double t1) {
    const auto& mesh = *state.mesh;
    const double delta = t1 - t0;

    // time/edge-averaged normal velocity per edge, oriented left -> right
    std::vector<double> Ve(mesh.n_edges());
    for (int e = 0; e < mesh.n_edges(); ++e) {
        const PolyEdge& ed = mesh.edges[e];
        const auto& p = mesh.vertices[ed.v0];
        const auto& q = mesh.vertices[ed.v1];
        Ve[e] = face_average_velocity(cfg.velocity, p[0], p[1], q[0], q[1], t0, t1);
    }

    // sharp monotonicity refusal: outflow Courant sum per cell
    for (int c = 0; c < mesh.n_cells(); ++c) {
        double outflow = 0.0;
        for (int e : mesh.cell_edges[c]) {
            const PolyEdge& ed = mesh.edges[e];
            const double vout = (ed.cell_left == c) ? Ve[e] : -Ve[e];
            outflow += ed.length * std::max(vout, 0.0);
        }
        if (delta / mesh.areas[c] * outflow * cfg.g.lipschitz > 1.0 + 1e-9)
            throw CflError("fvpoly: step violates the per-cell monotonicity bound");
    }

    std::vector<double> acc(mesh.n_cells(), 0.0);  // sum of outward fluxes, scaled by |e|
    for (int e = 0; e < mesh.n_edges(); ++e) {
        const PolyEdge& ed = mesh.edges[e];
        const double aL = state.values[ed.cell_left];
        if (ed.is_boundary()) {
            if (cfg.closure == BoundaryClosure::zero_flux) continue;
            const double ghost = cfg.boundary_value(t0, ed);
            const double phi = std::max(Ve[e], 0.0) * cfg.g.eval(aL, ghost) -
                               std::max(-Ve[e], 0.0) * cfg.g.eval(ghost, aL);
            acc[ed.cell_left] += ed.length * phi;
        } else {
            const double aR = state.values[ed.cell_right];
            const double phi = std::max(Ve[e], 0.0) * cfg.g.eval(aL, aR) -
                               std::max(-Ve[e], 0.0) * cfg.g.eval(aR, aL);
            acc[ed.cell_left] += ed.length * phi;
            acc[ed.cell_right] -= ed.length * phi;
        }
    }

    PolyField out;
    out.mesh = state.mesh;
    out.time = t1;
    out.values.resize(mesh.n_cells());
    for (int c = 0; c < mesh.n_cells(); ++c) {
        double v = state.values[c] - delta / mesh.areas[c] * acc[c];
        if (cfg.source)
            v += delta * quad::avg1(
                             [&](double t) {
                                 return polygon_average(mesh, c, [&](double x, double y) {
                                     return cfg.source(t, x, y);
                                 });
                             },
                             t0, t1);
        out.values[c] = v;
    }
    return out;
}

PolyRunResult run_poly(const PolyField& initial, const PolySchemeConfig& cfg, double T) {
    PolyRunResult r{initial, {}};
    const double span = T - initial.time;
    if (span <= 0.0 || cfg.delta <= 0.0) return r;
    const int N = static_cast<int>(std::ceil(span / cfg.delta - 1e-12));
    const double delta = span / N;
    r.trace.steps = N;
    r.trace.delta = delta;
    for (int n = 0; n < N; ++n) {
        const double t0 = initial.time + n * delta;
        PolyField next = step_poly(r.final, cfg, t0, t0 + delta);
        double dsum = 0.0;
        for (int c = 0; c < initial.mesh->n_cells(); ++c)
            dsum += initial.mesh->areas[c] * std::abs(next.values[c] - r.final.values[c]);
        r.trace.bv_time += dsum;
        r.final = std::move(next);
        r.trace.times.push_back(r.final.time);
        r.trace.bv.push_back(bv_poly(r.final));
        r.trace.mass.push_back(total_mass(r.final));
        double li = 0.0;
        for (double v : r.final.values) li = std::max(li, std::abs(v));
        r.trace.linf.push_back(li);
    }
    r.final.time = T;
    return r;
}

}  // namespace fvbv
