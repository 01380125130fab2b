#pragma once

#include <optional>
#include <vector>

#include "fvbv/fv2d.hpp"
#include "fvbv/fv3d.hpp"
#include "fvbv/fvpoly.hpp"

namespace fvbv {

struct ErrorNorms {
    double linf = 0.0, l1 = 0.0, l2 = 0.0;
};

struct NormReport {
    std::optional<ErrorNorms> error;  ///< present when an exact solution exists
    double bv = 0.0;
    double mass = 0.0;
    double time = 0.0;
};

/// |.|_{L1_y BV_x}: sum_j h_j sum_i |a_{i,j} - a_{i-1,j}|.
double bv_l1y_bvx(const DiscreteField2D& f);
/// |.|_{L1_x BV_y}: sum_i k_i sum_j |a_{i,j} - a_{i,j-1}|.
double bv_l1x_bvy(const DiscreteField2D& f);
/// Discrete BV_{x,y} seminorm (sum of the two directional parts).
double bv_xy(const DiscreteField2D& f);
double bv_xy(const std::vector<double>& values, const std::vector<double>& kx,
             const std::vector<double>& hy);

/// sum_K |K| sum_n |a^{n+1}_K - a^n_K| over consecutive snapshots.
double bv_time(const std::vector<DiscreteField2D>& snapshots);

/// Three-directional BV seminorm of a 3D field.
double bv_xyz(const DiscreteField3D& f);

/// Edge-weighted jump sum over the interior edges.
double bv_poly(const PolyField& f);

double total_mass(const DiscreteField2D& f);
double total_mass(const DiscreteField3D& f);
double total_mass(const PolyField& f);

/// Errors against the cell averages of exact(t,.,.) (3-point Gauss):
/// max |e|, sum |K||e|, sqrt(sum |K| e^2).
ErrorNorms error_norms(const DiscreteField2D& f, const ScalarFn3& exact, double t);
ErrorNorms error_norms(const PolyField& f, const ScalarFn3& exact, double t);

/// log(v_fine/v_coarse)/log(h_fine/h_coarse); nullopt for nonpositive
/// values (undefined rate).
std::optional<double> rate(double v_fine, double v_coarse, double h_fine, double h_coarse);

NormReport report(const DiscreteField2D& f, const ScalarFn3& exact, double t);

}  // namespace fvbv
