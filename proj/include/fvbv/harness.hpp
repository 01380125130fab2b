#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fvbv/mesh.hpp"

namespace fvbv {

struct ExperimentConfig {
    std::string case_name = "ex1-linear";
    MeshFamily mesh = MeshFamily::cartesian;
    int rows = 5;           ///< refinement levels to run (preset ladder prefix)
    double T = -1.0;        ///< <= 0: case default
    std::uint64_t seed = 0;
    std::string out_path;       ///< empty: no CSV file
    std::string snapshot_path;  ///< empty: no snapshot; else finest-row field dump
};

struct ConvergenceRow {
    double h = 0.0;      ///< spatial discretisation factor (actual mesh h_max)
    double delta = 0.0;  ///< time step actually used
    std::optional<double> err_linf, err_l1, err_l2;  ///< empty without an exact solution
    double bv = 0.0;     ///< BV_{x,y} seminorm of the final field
    std::optional<double> rate_l1, rate_bv;          ///< present from the second row on
    int steps = 0;
    int cells = 0;
};

/// Runs the preset refinement ladder for a case/mesh combination.
/// Deterministic for a fixed config (the seed feeds mesh generation).
/// Unsupported combinations (despres off staggered meshes, ex3-nonlinear
/// off Cartesian) throw std::invalid_argument.
std::vector<ConvergenceRow> run_experiment(const ExperimentConfig& cfg);

/// CSV with metadata comment lines, display columns (3 significant
/// digits, "-" for absent values) and full-precision shadow columns.
void emit_csv(const std::vector<ConvergenceRow>& rows, const ExperimentConfig& cfg,
              std::ostream& out);

/// Reads back a file written by emit_csv; values come from the
/// full-precision shadow columns and reproduce the originals exactly.
std::vector<ConvergenceRow> parse_csv(std::istream& in);

std::vector<std::string> list_cases();

/// Flat key=value text ('#' comments); recognised keys: case, mesh, rows,
/// T, seed, out, snapshot. Parsed values override the current config.
void apply_config_text(const std::string& text, ExperimentConfig& cfg);

}  // namespace fvbv
