#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fvbv/fv2d.hpp"
#include "fvbv/harness.hpp"
#include "fvbv/mesh.hpp"
#include "fvbv/metrics.hpp"
#include "fvbv/physics.hpp"

namespace py = pybind11;
using namespace fvbv;

namespace {

Rect rect_from(const std::tuple<double, double, double, double>& t) {
    return {std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t)};
}

py::dict row_to_dict(const ConvergenceRow& r) {
    py::dict d;
    d["h"] = r.h;
    d["delta"] = r.delta;
    d["err_linf"] = r.err_linf ? py::object(py::float_(*r.err_linf)) : py::none();
    d["err_l1"] = r.err_l1 ? py::object(py::float_(*r.err_l1)) : py::none();
    d["err_l2"] = r.err_l2 ? py::object(py::float_(*r.err_l2)) : py::none();
    d["bv"] = r.bv;
    d["rate_l1"] = r.rate_l1 ? py::object(py::float_(*r.rate_l1)) : py::none();
    d["rate_bv"] = r.rate_bv ? py::object(py::float_(*r.rate_bv)) : py::none();
    d["steps"] = r.steps;
    d["cells"] = r.cells;
    return d;
}

FluxFunction flux_by_name(const std::string& name) {
    if (name == "linear") return FluxFunction::linear();
    if (name == "sinusoidal") return FluxFunction::sinusoidal();
    throw std::invalid_argument("flux must be 'linear' or 'sinusoidal'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite-volume solvers and convergence studies for scalar conservation laws";

    m.def("list_cases", &list_cases, "Names of the built-in experiment cases.");

    m.def(
        "run_experiment",
        [](const std::string& case_name, const std::string& mesh, int rows, double T,
           std::uint64_t seed, const std::string& out) {
            ExperimentConfig cfg;
            cfg.case_name = case_name;
            cfg.mesh = family_from_string(mesh);
            cfg.rows = rows;
            cfg.T = T;
            cfg.seed = seed;
            cfg.out_path = out;
            const auto rs = run_experiment(cfg);
            py::list out_rows;
            for (const auto& r : rs) out_rows.append(row_to_dict(r));
            return out_rows;
        },
        py::arg("case_name"), py::arg("mesh") = "cartesian", py::arg("rows") = 5,
        py::arg("T") = -1.0, py::arg("seed") = 0, py::arg("out") = "",
        "Run a preset refinement study; returns one dict per refinement level.");

    m.def(
        "godunov_flux",
        [](const std::string& flux, double a, double b) { return godunov(flux_by_name(flux)).eval(a, b); },
        py::arg("flux"), py::arg("a"), py::arg("b"),
        "Godunov numerical flux g(a,b) for the built-in flux functions.");

    m.def(
        "max_timestep",
        [](const std::vector<double>& x_edges, const std::vector<double>& y_edges, double lip_g,
           double u_sup) { return max_timestep(build_cartesian(x_edges, y_edges), lip_g, u_sup); },
        py::arg("x_edges"), py::arg("y_edges"), py::arg("lip_g"), py::arg("u_sup"),
        "CFL-limited step for a grid given Lip(g) and the velocity bound.");

    m.def(
        "admissibility_constant",
        [](const std::vector<double>& x_edges, const std::vector<double>& y_edges) {
            return admissibility_constant(build_cartesian(x_edges, y_edges));
        },
        py::arg("x_edges"), py::arg("y_edges"));

    m.def(
        "bv_xy",
        [](const std::vector<std::vector<double>>& values, const std::vector<double>& kx,
           const std::vector<double>& hy) {
            const int nx = static_cast<int>(kx.size()), ny = static_cast<int>(hy.size());
            if (values.size() != static_cast<std::size_t>(nx))
                throw std::invalid_argument("values must be nx rows of ny entries");
            std::vector<double> flat(static_cast<std::size_t>(nx) * ny);
            for (int i = 0; i < nx; ++i) {
                if (values[i].size() != static_cast<std::size_t>(ny))
                    throw std::invalid_argument("values must be nx rows of ny entries");
                for (int j = 0; j < ny; ++j) flat[i + nx * j] = values[i][j];
            }
            return bv_xy(flat, kx, hy);
        },
        py::arg("values"), py::arg("kx"), py::arg("hy"),
        "Discrete BV_{x,y} seminorm of cell values (indexed [i][j]).");

    m.def(
        "rate",
        [](double v_fine, double v_coarse, double h_fine, double h_coarse) -> py::object {
            const auto r = rate(v_fine, v_coarse, h_fine, h_coarse);
            return r ? py::object(py::float_(*r)) : py::none();
        },
        py::arg("v_fine"), py::arg("v_coarse"), py::arg("h_fine"), py::arg("h_coarse"),
        "log(v_fine/v_coarse)/log(h_fine/h_coarse); None when undefined.");

    m.def(
        "mesh_summary",
        [](const std::string& family, const std::tuple<double, double, double, double>& domain,
           double target_h, std::uint64_t seed) {
            const auto mesh = build_family(family_from_string(family), rect_from(domain), target_h, seed);
            py::dict d;
            d["cells"] = mesh.n_cells();
            d["edges"] = mesh.n_edges();
            d["h_max"] = mesh.h_max;
            d["area"] = mesh.total_area();
            return d;
        },
        py::arg("family"), py::arg("domain"), py::arg("target_h"), py::arg("seed") = 0,
        "Build a mesh family and report cell/edge counts, h_max and covered area.");

    m.def(
        "dump_mesh",
        [](const std::string& family, const std::tuple<double, double, double, double>& domain,
           double target_h, std::uint64_t seed) {
            const auto mesh = build_family(family_from_string(family), rect_from(domain), target_h, seed);
            std::ostringstream out;
            dump_mesh(mesh, out);
            return out.str();
        },
        py::arg("family"), py::arg("domain"), py::arg("target_h"), py::arg("seed") = 0,
        "Plain-text mesh dump (vertices/cells/edges sections).");
}
