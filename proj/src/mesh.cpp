#include "fvbv/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace fvbv {

namespace {

std::vector<double> widths_of(const std::vector<double>& edges, const char* axis) {
    if (edges.size() < 2)
        throw std::invalid_argument(std::string("grid: need at least 2 ") + axis + "-edges");
    std::vector<double> w(edges.size() - 1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        w[i] = edges[i + 1] - edges[i];
        if (!(w[i] > 0.0))
            throw std::invalid_argument(std::string("grid: ") + axis + "-edges not strictly increasing");
    }
    return w;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

std::vector<double> linspace(double a, double b, int n_cells) {
    if (n_cells < 1) throw std::invalid_argument("grid: need at least one cell");
    std::vector<double> e(n_cells + 1);
    for (int i = 0; i <= n_cells; ++i) e[i] = a + (b - a) * (static_cast<double>(i) / n_cells);
    e.front() = a;
    e.back() = b;
    return e;
}

}  // namespace

CartesianGrid2D build_cartesian(std::vector<double> x_edges, std::vector<double> y_edges) {
    CartesianGrid2D g;
    g.kx = widths_of(x_edges, "x");
    g.hy = widths_of(y_edges, "y");
    g.x_edges = std::move(x_edges);
    g.y_edges = std::move(y_edges);
    g.h_max = std::max(max_of(g.kx), max_of(g.hy));
    return g;
}

CartesianGrid2D uniform_grid(const Rect& box, int nx, int ny) {
    return build_cartesian(linspace(box.xmin, box.xmax, nx), linspace(box.ymin, box.ymax, ny));
}

CartesianGrid3D build_cartesian3d(std::vector<double> x_edges, std::vector<double> y_edges,
                                  std::vector<double> z_edges) {
    CartesianGrid3D g;
    g.kx = widths_of(x_edges, "x");
    g.hy = widths_of(y_edges, "y");
    g.lz = widths_of(z_edges, "z");
    g.x_edges = std::move(x_edges);
    g.y_edges = std::move(y_edges);
    g.z_edges = std::move(z_edges);
    g.h_max = std::max({max_of(g.kx), max_of(g.hy), max_of(g.lz)});
    return g;
}

CartesianGrid3D uniform_grid3d(const Box3& box, int nx, int ny, int nz) {
    return build_cartesian3d(linspace(box.xmin, box.xmax, nx), linspace(box.ymin, box.ymax, ny),
                             linspace(box.zmin, box.zmax, nz));
}

double admissibility_constant(const CartesianGrid2D& grid) {
    // ratios hy/kx attain extremes at extreme widths
    const double kmin = *std::min_element(grid.kx.begin(), grid.kx.end());
    const double kmax = max_of(grid.kx);
    const double hmin = *std::min_element(grid.hy.begin(), grid.hy.end());
    const double hmax = max_of(grid.hy);
    return std::max(hmax / kmin, kmax / hmin);
}

double admissibility_constant(const CartesianGrid3D& grid) {
    double rmax = 0.0;
    double rmin = std::numeric_limits<double>::infinity();
    for (double k : grid.kx)
        for (double h : grid.hy)
            for (double l : grid.lz) {
                const double r = h / k + k / l + l / h;
                rmax = std::max(rmax, r);
                rmin = std::min(rmin, r);
            }
    return std::max(rmax, 1.0 / rmin);
}

std::string_view to_string(MeshFamily family) {
    switch (family) {
        case MeshFamily::cartesian: return "cartesian";
        case MeshFamily::perturbed_cartesian: return "perturbed_cartesian";
        case MeshFamily::hexagonal: return "hexagonal";
        case MeshFamily::triangular: return "triangular";
        case MeshFamily::staggered: return "staggered";
    }
    return "?";
}

MeshFamily family_from_string(std::string_view name) {
    if (name == "cartesian") return MeshFamily::cartesian;
    if (name == "perturbed_cartesian" || name == "perturbed") return MeshFamily::perturbed_cartesian;
    if (name == "hexagonal") return MeshFamily::hexagonal;
    if (name == "triangular") return MeshFamily::triangular;
    if (name == "staggered") return MeshFamily::staggered;
    throw std::invalid_argument("unknown mesh family: " + std::string(name));
}

double PolygonalMesh::total_area() const {
    double s = 0.0;
    for (double a : areas) s += a;
    return s;
}

bool PolygonalMesh::cell_is_axis_rect(int c) const {
    // axis-aligned sides (hanging vertices allowed) filling the bbox
    const auto& loop = cells[c];
    for (std::size_t e = 0; e < loop.size(); ++e) {
        const auto& p = vertices[loop[e]];
        const auto& q = vertices[loop[(e + 1) % loop.size()]];
        const double dx = std::abs(q[0] - p[0]), dy = std::abs(q[1] - p[1]);
        if (dx > 1e-12 * (1.0 + dy) && dy > 1e-12 * (1.0 + dx)) return false;
    }
    const Rect bb = cell_bbox(c);
    return std::abs(areas[c] - bb.area()) <= 1e-12 * bb.area();
}

Rect PolygonalMesh::cell_bbox(int c) const {
    Rect r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (int v : cells[c]) {
        r.xmin = std::min(r.xmin, vertices[v][0]);
        r.xmax = std::max(r.xmax, vertices[v][0]);
        r.ymin = std::min(r.ymin, vertices[v][1]);
        r.ymax = std::max(r.ymax, vertices[v][1]);
    }
    return r;
}

namespace {

using Pt = std::array<double, 2>;
using Loop = std::vector<Pt>;

struct MeshAssembler {
    // Quantized vertex merge plus T-junction conforming; tolerance scales
    // with the requested cell size.
    double quant;
    double bucket;
    std::vector<Pt> verts;
    std::unordered_map<std::uint64_t, int> vert_ids;
    std::unordered_map<std::uint64_t, std::vector<int>> grid_buckets;

    explicit MeshAssembler(double target_h) : quant(1e-7 * target_h), bucket(0.51 * target_h) {}

    static std::uint64_t key2(long long a, long long b) {
        return (static_cast<std::uint64_t>(a) << 32) ^ (static_cast<std::uint64_t>(b) & 0xffffffffULL);
    }
    std::uint64_t vkey(const Pt& p) const {
        return key2(llround(p[0] / quant), llround(p[1] / quant));
    }
    std::uint64_t bkey(double x, double y) const {
        return key2(static_cast<long long>(std::floor(x / bucket)),
                    static_cast<long long>(std::floor(y / bucket)));
    }

    int add_vertex(const Pt& p) {
        const auto k = vkey(p);
        auto it = vert_ids.find(k);
        if (it != vert_ids.end()) return it->second;
        const int id = static_cast<int>(verts.size());
        verts.push_back(p);
        vert_ids.emplace(k, id);
        grid_buckets[bkey(p[0], p[1])].push_back(id);
        return id;
    }

    // vertex ids lying strictly inside segment a->b, ordered along it
    std::vector<int> vertices_on(const Pt& a, const Pt& b) const {
        const double dx = b[0] - a[0], dy = b[1] - a[1];
        const double len2 = dx * dx + dy * dy;
        const double len = std::sqrt(len2);
        std::vector<std::pair<double, int>> hits;
        const long long bx0 = static_cast<long long>(std::floor((std::min(a[0], b[0]) - quant) / bucket));
        const long long bx1 = static_cast<long long>(std::floor((std::max(a[0], b[0]) + quant) / bucket));
        const long long by0 = static_cast<long long>(std::floor((std::min(a[1], b[1]) - quant) / bucket));
        const long long by1 = static_cast<long long>(std::floor((std::max(a[1], b[1]) + quant) / bucket));
        for (long long bx = bx0; bx <= bx1; ++bx)
            for (long long by = by0; by <= by1; ++by) {
                auto it = grid_buckets.find(key2(bx, by));
                if (it == grid_buckets.end()) continue;
                for (int id : it->second) {
                    const Pt& p = verts[id];
                    const double cross = dx * (p[1] - a[1]) - dy * (p[0] - a[0]);
                    if (std::abs(cross) > 4.0 * quant * len) continue;
                    const double t = (dx * (p[0] - a[0]) + dy * (p[1] - a[1])) / len2;
                    if (t * len <= 2.0 * quant || (1.0 - t) * len <= 2.0 * quant) continue;
                    hits.emplace_back(t, id);
                }
            }
        std::sort(hits.begin(), hits.end());
        std::vector<int> ids;
        ids.reserve(hits.size());
        for (auto& h : hits) ids.push_back(h.second);
        return ids;
    }
};

double signed_area(const Loop& loop) {
    double s = 0.0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const Pt& p = loop[i];
        const Pt& q = loop[(i + 1) % loop.size()];
        s += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * s;
}

Pt loop_centroid(const Loop& loop, double area) {
    double cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const Pt& p = loop[i];
        const Pt& q = loop[(i + 1) % loop.size()];
        const double w = p[0] * q[1] - q[0] * p[1];
        cx += (p[0] + q[0]) * w;
        cy += (p[1] + q[1]) * w;
    }
    return {cx / (6.0 * area), cy / (6.0 * area)};
}

// Sutherland-Hodgman clip against an axis-aligned rectangle
Loop clip_to_rect(Loop poly, const Rect& r) {
    auto clip_half = [](const Loop& in, auto inside, auto intersect) {
        Loop out;
        const std::size_t n = in.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Pt& cur = in[i];
            const Pt& nxt = in[(i + 1) % n];
            const bool cin = inside(cur), nin = inside(nxt);
            if (cin) out.push_back(cur);
            if (cin != nin) out.push_back(intersect(cur, nxt));
        }
        return out;
    };
    auto lerp_x = [](const Pt& p, const Pt& q, double x) -> Pt {
        const double t = (x - p[0]) / (q[0] - p[0]);
        return {x, p[1] + t * (q[1] - p[1])};
    };
    auto lerp_y = [](const Pt& p, const Pt& q, double y) -> Pt {
        const double t = (y - p[1]) / (q[1] - p[1]);
        return {p[0] + t * (q[0] - p[0]), y};
    };
    poly = clip_half(poly, [&](const Pt& p) { return p[0] >= r.xmin; },
                     [&](const Pt& p, const Pt& q) { return lerp_x(p, q, r.xmin); });
    if (poly.empty()) return poly;
    poly = clip_half(poly, [&](const Pt& p) { return p[0] <= r.xmax; },
                     [&](const Pt& p, const Pt& q) { return lerp_x(p, q, r.xmax); });
    if (poly.empty()) return poly;
    poly = clip_half(poly, [&](const Pt& p) { return p[1] >= r.ymin; },
                     [&](const Pt& p, const Pt& q) { return lerp_y(p, q, r.ymin); });
    if (poly.empty()) return poly;
    poly = clip_half(poly, [&](const Pt& p) { return p[1] <= r.ymax; },
                     [&](const Pt& p, const Pt& q) { return lerp_y(p, q, r.ymax); });
    return poly;
}

PolygonalMesh assemble(MeshFamily family, const Rect& domain, double target_h,
                       std::vector<Loop> raw_cells,
                       const std::vector<double>* exact_areas = nullptr) {
    MeshAssembler as(target_h);
    std::vector<std::vector<int>> loops;
    loops.reserve(raw_cells.size());
    for (auto& rc : raw_cells) {
        if (signed_area(rc) < 0.0) std::reverse(rc.begin(), rc.end());
        std::vector<int> ids;
        ids.reserve(rc.size());
        for (const Pt& p : rc) {
            const int id = as.add_vertex(p);
            if (ids.empty() || ids.back() != id) ids.push_back(id);
        }
        while (ids.size() > 1 && ids.front() == ids.back()) ids.pop_back();
        if (ids.size() < 3) throw std::runtime_error("mesh: degenerate cell");
        loops.push_back(std::move(ids));
    }

    // conform: split cell sides at hanging vertices
    PolygonalMesh mesh;
    mesh.family = family;
    mesh.domain = domain;
    mesh.vertices = as.verts;
    mesh.cells.reserve(loops.size());
    for (const auto& loop : loops) {
        std::vector<int> full;
        for (std::size_t i = 0; i < loop.size(); ++i) {
            const int a = loop[i], b = loop[(i + 1) % loop.size()];
            full.push_back(a);
            for (int m : as.vertices_on(mesh.vertices[a], mesh.vertices[b])) full.push_back(m);
        }
        mesh.cells.push_back(std::move(full));
    }

    mesh.areas.resize(mesh.n_cells());
    mesh.centroids.resize(mesh.n_cells());
    mesh.h_max = 0.0;
    for (int c = 0; c < mesh.n_cells(); ++c) {
        Loop pts;
        for (int v : mesh.cells[c]) pts.push_back(mesh.vertices[v]);
        const double a = signed_area(pts);
        if (!(a > 0.0)) throw std::runtime_error("mesh: nonpositive cell area");
        mesh.areas[c] = exact_areas ? (*exact_areas)[c] : a;
        mesh.centroids[c] = loop_centroid(pts, a);
        if (mesh.cell_is_axis_rect(c)) {
            // side length, matching the Cartesian h_max convention
            const Rect bb = mesh.cell_bbox(c);
            mesh.h_max = std::max({mesh.h_max, bb.width(), bb.height()});
        } else {
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const Pt& p = pts[i];
                const Pt& q = pts[(i + 1) % pts.size()];
                mesh.h_max = std::max(mesh.h_max, std::hypot(q[0] - p[0], q[1] - p[1]));
            }
        }
    }

    // edge identification: interior edges appear exactly twice
    std::map<std::pair<int, int>, int> edge_ids;
    mesh.cell_edges.resize(mesh.n_cells());
    for (int c = 0; c < mesh.n_cells(); ++c) {
        const auto& loop = mesh.cells[c];
        for (std::size_t i = 0; i < loop.size(); ++i) {
            const int a = loop[i], b = loop[(i + 1) % loop.size()];
            const auto key = std::minmax(a, b);
            auto it = edge_ids.find(key);
            if (it == edge_ids.end()) {
                PolyEdge e;
                e.v0 = a;
                e.v1 = b;
                e.cell_left = c;
                const double dx = mesh.vertices[b][0] - mesh.vertices[a][0];
                const double dy = mesh.vertices[b][1] - mesh.vertices[a][1];
                e.length = std::hypot(dx, dy);
                e.nx = dy / e.length;   // outward normal of a ccw loop
                e.ny = -dx / e.length;
                const int id = static_cast<int>(mesh.edges.size());
                mesh.edges.push_back(e);
                edge_ids.emplace(key, id);
                mesh.cell_edges[c].push_back(id);
            } else {
                PolyEdge& e = mesh.edges[it->second];
                if (e.cell_right >= 0) throw std::runtime_error("mesh: edge shared by >2 cells");
                e.cell_right = c;
                mesh.cell_edges[c].push_back(it->second);
            }
        }
    }

    const double cover = mesh.total_area();
    if (std::abs(cover - domain.area()) > 1e-9 * domain.area())
        throw std::runtime_error("mesh: cells do not tile the domain");
    return mesh;
}

std::vector<Loop> gen_cartesian(const Rect& d, int nx, int ny) {
    const auto xe = linspace(d.xmin, d.xmax, nx);
    const auto ye = linspace(d.ymin, d.ymax, ny);
    std::vector<Loop> cells;
    cells.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            cells.push_back({{{xe[i], ye[j]}, {xe[i + 1], ye[j]}, {xe[i + 1], ye[j + 1]}, {xe[i], ye[j + 1]}}});
    return cells;
}

std::vector<Loop> gen_perturbed(const Rect& d, double target_h, int nx, int ny,
                                std::uint64_t seed, double theta) {
    const auto xe = linspace(d.xmin, d.xmax, nx);
    const auto ye = linspace(d.ymin, d.ymax, ny);
    std::vector<Pt> v((nx + 1) * (ny + 1));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double rmax = theta * target_h;
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i) {
            Pt p{xe[i], ye[j]};
            if (i > 0 && i < nx && j > 0 && j < ny) {
                const double r = rmax * std::sqrt(unit(rng));
                const double ang = 2.0 * M_PI * unit(rng);
                p[0] += r * std::cos(ang);
                p[1] += r * std::sin(ang);
            }
            v[i + (nx + 1) * j] = p;
        }
    std::vector<Loop> cells;
    cells.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            Loop q{v[i + (nx + 1) * j], v[i + 1 + (nx + 1) * j], v[i + 1 + (nx + 1) * (j + 1)],
                   v[i + (nx + 1) * (j + 1)]};
            if (signed_area(q) < 1e-10 * target_h * target_h)
                throw std::runtime_error("perturbed mesh: degenerate cell (lower theta or change seed)");
            cells.push_back(std::move(q));
        }
    return cells;
}

std::vector<Loop> gen_triangular(const Rect& d, int nx, int ny) {
    const auto xe = linspace(d.xmin, d.xmax, nx);
    const auto ye = linspace(d.ymin, d.ymax, ny);
    std::vector<Loop> cells;
    cells.reserve(2 * static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const Pt p00{xe[i], ye[j]}, p10{xe[i + 1], ye[j]};
            const Pt p11{xe[i + 1], ye[j + 1]}, p01{xe[i], ye[j + 1]};
            cells.push_back({p00, p10, p11});
            cells.push_back({p00, p11, p01});
        }
    return cells;
}

std::vector<Loop> gen_hexagonal(const Rect& d, double target_h) {
    // Flat-top hexagons sized for cell-area parity with a Cartesian grid
    // of spacing target_h, clipped at the boundary. Vertices close to the
    // boundary are snapped onto it first; this removes sliver cells that
    // would otherwise dominate the CFL limit.
    const double R = target_h / std::sqrt(1.5 * std::sqrt(3.0));
    const double s = R * std::sqrt(3.0) / 2.0;
    const double snap = 0.3 * R;
    const double col_dx = 1.5 * R;
    const double row_dy = 2.0 * s;
    auto snap_to = [&](double v, double lo, double hi) {
        if (std::abs(v - lo) < snap) return lo;
        if (std::abs(v - hi) < snap) return hi;
        return v;
    };
    const int q0 = static_cast<int>(std::floor((d.xmin - 2.0 * R) / col_dx)) - 1;
    const int q1 = static_cast<int>(std::ceil((d.xmax + 2.0 * R) / col_dx)) + 1;
    std::vector<Loop> cells;
    for (int q = q0; q <= q1; ++q) {
        const double cx = q * col_dx;
        const double y_off = (q % 2 != 0) ? s : 0.0;
        const int r0 = static_cast<int>(std::floor((d.ymin - y_off - 2.0 * R) / row_dy)) - 1;
        const int r1 = static_cast<int>(std::ceil((d.ymax - y_off + 2.0 * R) / row_dy)) + 1;
        for (int r = r0; r <= r1; ++r) {
            const double cy = r * row_dy + y_off;
            Loop hex{{cx + R, cy},     {cx + 0.5 * R, cy + s}, {cx - 0.5 * R, cy + s},
                     {cx - R, cy},     {cx - 0.5 * R, cy - s}, {cx + 0.5 * R, cy - s}};
            for (Pt& p : hex) {
                p[0] = snap_to(p[0], d.xmin, d.xmax);
                p[1] = snap_to(p[1], d.ymin, d.ymax);
            }
            Loop clipped = clip_to_rect(hex, d);
            if (clipped.size() >= 3 && std::abs(signed_area(clipped)) > 1e-6 * R * R)
                cells.push_back(std::move(clipped));
        }
    }
    return cells;
}

// Brick pattern: columns of square cells, alternate columns offset by half
// a cell so the transport in x crosses the staggered interfaces; offset
// columns carry half-height cells at the top and bottom boundary.
std::vector<Loop> gen_staggered(const Rect& d, double target_h, int nx, int ny) {
    const auto xe = linspace(d.xmin, d.xmax, nx);
    const double hy = d.height() / ny;
    std::vector<Loop> cells;
    for (int i = 0; i < nx; ++i) {
        const double x0 = xe[i], x1 = xe[i + 1];
        std::vector<double> ye;
        if (i % 2 == 0) {
            ye = linspace(d.ymin, d.ymax, ny);
        } else {
            ye.push_back(d.ymin);
            for (int j = 0; j < ny; ++j) ye.push_back(d.ymin + (j + 0.5) * hy);
            ye.push_back(d.ymax);
        }
        for (std::size_t j = 0; j + 1 < ye.size(); ++j)
            cells.push_back({{{x0, ye[j]}, {x1, ye[j]}, {x1, ye[j + 1]}, {x0, ye[j + 1]}}});
    }
    return cells;
}

}  // namespace

PolygonalMesh build_family(MeshFamily family, const Rect& domain, double target_h,
                           std::uint64_t seed, double perturb_theta) {
    if (!(target_h > 0.0) || target_h >= std::min(domain.width(), domain.height()))
        throw std::invalid_argument("build_family: target_h must be positive and smaller than the domain");
    const int nx = std::max(1, static_cast<int>(std::lround(domain.width() / target_h)));
    const int ny = std::max(1, static_cast<int>(std::lround(domain.height() / target_h)));
    switch (family) {
        case MeshFamily::cartesian:
            return assemble(family, domain, target_h, gen_cartesian(domain, nx, ny));
        case MeshFamily::perturbed_cartesian:
            return assemble(family, domain, target_h,
                            gen_perturbed(domain, target_h, nx, ny, seed, perturb_theta));
        case MeshFamily::triangular:
            return assemble(family, domain, target_h, gen_triangular(domain, nx, ny));
        case MeshFamily::hexagonal: {
            PolygonalMesh m = assemble(family, domain, target_h, gen_hexagonal(domain, target_h));
            m.h_max = target_h;  // nominal size; boundary cells are clip artifacts
            return m;
        }
        case MeshFamily::staggered:
            return assemble(family, domain, target_h, gen_staggered(domain, target_h, nx, ny));
    }
    throw std::invalid_argument("build_family: unknown family");
}

PolygonalMesh as_polygonal(const CartesianGrid2D& grid) {
    std::vector<Loop> cells;
    std::vector<double> areas;
    cells.reserve(static_cast<std::size_t>(grid.nx()) * grid.ny());
    for (int j = 0; j < grid.ny(); ++j)
        for (int i = 0; i < grid.nx(); ++i) {
            const double x0 = grid.x_edges[i], x1 = grid.x_edges[i + 1];
            const double y0 = grid.y_edges[j], y1 = grid.y_edges[j + 1];
            cells.push_back({{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}});
            areas.push_back(grid.cell_area(i, j));
        }
    PolygonalMesh m = assemble(MeshFamily::cartesian, grid.box(), grid.h_max, std::move(cells), &areas);
    m.h_max = grid.h_max;
    return m;
}

void dump_mesh(const PolygonalMesh& mesh, std::ostream& out) {
    out.precision(17);
    out << "# fvbv mesh dump\n";
    out << "# family=" << to_string(mesh.family) << " h_max=" << mesh.h_max << "\n";
    out << "vertices " << mesh.vertices.size() << "\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
        out << i << " " << mesh.vertices[i][0] << " " << mesh.vertices[i][1] << "\n";
    out << "cells " << mesh.n_cells() << "\n";
    for (int c = 0; c < mesh.n_cells(); ++c) {
        out << c << " " << mesh.areas[c] << " " << mesh.cells[c].size();
        for (int v : mesh.cells[c]) out << " " << v;
        out << "\n";
    }
    out << "edges " << mesh.n_edges() << "\n";
    for (int e = 0; e < mesh.n_edges(); ++e) {
        const PolyEdge& ed = mesh.edges[e];
        out << e << " " << ed.v0 << " " << ed.v1 << " " << ed.cell_left << " " << ed.cell_right
            << " " << ed.length << " " << ed.nx << " " << ed.ny << "\n";
    }
}

}  // namespace fvbv
