#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace fvbv {

struct Rect {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }
};

struct Box3 {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0, zmin = 0.0, zmax = 1.0;
    double volume() const { return (xmax - xmin) * (ymax - ymin) * (zmax - zmin); }
};

/// Nonuniform tensor-product grid on (a,b) x (c,d).
/// Cell K_ij = (x_edges[i], x_edges[i+1]) x (y_edges[j], y_edges[j+1]),
/// 0 <= i < nx, 0 <= j < ny.
struct CartesianGrid2D {
    std::vector<double> x_edges;
    std::vector<double> y_edges;
    std::vector<double> kx;  ///< cell widths, size nx
    std::vector<double> hy;  ///< cell heights, size ny
    double h_max = 0.0;      ///< max over all widths and heights

    int nx() const { return static_cast<int>(kx.size()); }
    int ny() const { return static_cast<int>(hy.size()); }
    double cell_area(int i, int j) const { return kx[i] * hy[j]; }
    Rect box() const { return {x_edges.front(), x_edges.back(), y_edges.front(), y_edges.back()}; }
    double domain_area() const { return box().area(); }
};

/// Validates monotonicity and derives widths. Throws std::invalid_argument
/// on a non-increasing or too-short edge sequence.
CartesianGrid2D build_cartesian(std::vector<double> x_edges, std::vector<double> y_edges);
CartesianGrid2D uniform_grid(const Rect& box, int nx, int ny);

struct CartesianGrid3D {
    std::vector<double> x_edges, y_edges, z_edges;
    std::vector<double> kx, hy, lz;
    double h_max = 0.0;

    int nx() const { return static_cast<int>(kx.size()); }
    int ny() const { return static_cast<int>(hy.size()); }
    int nz() const { return static_cast<int>(lz.size()); }
    double cell_volume(int i, int j, int m) const { return kx[i] * hy[j] * lz[m]; }
    Box3 box() const {
        return {x_edges.front(), x_edges.back(), y_edges.front(),
                y_edges.back(), z_edges.front(), z_edges.back()};
    }
};

CartesianGrid3D build_cartesian3d(std::vector<double> x_edges, std::vector<double> y_edges,
                                  std::vector<double> z_edges);
CartesianGrid3D uniform_grid3d(const Box3& box, int nx, int ny, int nz);

/// Smallest c >= 1 with 1/c <= hy[j]/kx[i] <= c for all i, j.
double admissibility_constant(const CartesianGrid2D& grid);
/// Smallest c with 1/c <= hy/kx + kx/lz + lz/hy <= c over all index triples.
double admissibility_constant(const CartesianGrid3D& grid);

enum class MeshFamily { cartesian, perturbed_cartesian, hexagonal, triangular, staggered };

std::string_view to_string(MeshFamily family);
MeshFamily family_from_string(std::string_view name);

struct PolyEdge {
    int v0 = -1, v1 = -1;     ///< endpoint vertex ids
    int cell_left = -1;       ///< cell the stored normal points away from
    int cell_right = -1;      ///< -1 on the domain boundary
    double length = 0.0;
    double nx = 0.0, ny = 0.0;  ///< unit normal, oriented left -> right
    bool is_boundary() const { return cell_right < 0; }
};

/// Conforming polygonal mesh. Edges are split at hanging (T-junction)
/// vertices during construction, so every interior edge has exactly two
/// incident cells.
struct PolygonalMesh {
    MeshFamily family = MeshFamily::cartesian;
    Rect domain;
    std::vector<std::array<double, 2>> vertices;
    std::vector<std::vector<int>> cells;  ///< counterclockwise vertex loops
    std::vector<double> areas;
    std::vector<std::array<double, 2>> centroids;
    std::vector<PolyEdge> edges;
    std::vector<std::vector<int>> cell_edges;  ///< edge ids around each cell
    double h_max = 0.0;  ///< max edge length (max side for rectangular cells)

    int n_cells() const { return static_cast<int>(cells.size()); }
    int n_edges() const { return static_cast<int>(edges.size()); }
    double total_area() const;
    /// True when the cell is an axis-aligned rectangle (exact projections
    /// of Heaviside-type data are available there).
    bool cell_is_axis_rect(int c) const;
    /// Bounding box of a cell.
    Rect cell_bbox(int c) const;
};

/// Builds one of the five mesh families on an axis-aligned domain.
/// target_h controls the cell diameter; `seed` feeds the generator used by
/// perturbed_cartesian (other families are deterministic by construction).
/// perturbed_cartesian displaces interior vertices by a uniform random
/// offset of magnitude <= perturb_theta * target_h; a degenerate cell
/// raises std::runtime_error.
PolygonalMesh build_family(MeshFamily family, const Rect& domain, double target_h,
                           std::uint64_t seed, double perturb_theta = 0.05);

/// Axis-aligned rectangles as polygons; cell count and per-cell areas are
/// preserved exactly. Cell c = i + nx*j matches grid cell (i, j).
PolygonalMesh as_polygonal(const CartesianGrid2D& grid);

/// Plain-text dump: sections `vertices`, `cells`, `edges`.
/// vertices: id x y
/// cells:    id area nvertices v0 v1 ...
/// edges:    id v0 v1 cell_left cell_right length nx ny
void dump_mesh(const PolygonalMesh& mesh, std::ostream& out);

}  // namespace fvbv
