#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fvbv/mesh.hpp"

namespace fvbv {

using ScalarFn1 = std::function<double(double)>;
using ScalarFn2 = std::function<double(double, double)>;
using ScalarFn3 = std::function<double(double, double, double)>;            // (t,x,y)
using ScalarFn4 = std::function<double(double, double, double, double)>;    // (t,x,y,z)

struct FluxFunction {
    enum class Tag { linear, sinusoidal, custom };
    Tag tag = Tag::custom;
    ScalarFn1 eval;
    double lipschitz = 0.0;

    static FluxFunction linear();      ///< f(s) = s
    static FluxFunction sinusoidal();  ///< f(s) = sin(2 pi s)
};

struct NumericalFlux {
    std::function<double(double, double)> eval;  ///< g(a,b)
    double lipschitz = 0.0;
};

/// Godunov flux: max of f over [b,a] when b < a, min over [a,b] when
/// a < b, f(a) at coincidence. Extrema are exact for the linear and
/// sinusoidal fluxes (endpoints plus interior critical points); a custom
/// flux falls back to a dense scan.
NumericalFlux godunov(const FluxFunction& f);

struct VelocityField {
    ScalarFn3 u, v;
    ScalarFn3 divergence;    ///< analytic divergence
    double sup_bound = 0.0;  ///< sup over the space-time domain of max(|u|,|v|)
};

struct VelocityField3D {
    ScalarFn4 u, v, w;  // (t,x,y,z)
    double sup_bound = 0.0;
};

/// Time-and-edge average of the normal velocity component over the
/// segment (x0,y0)->(x1,y1) and the window [t0,t1], 3-point Gauss in each
/// direction. The normal is the segment direction rotated by -90 degrees,
/// so a segment pointing +y has normal +x.
double face_average_velocity(const VelocityField& field, double x0, double y0, double x1,
                             double y1, double t0, double t1);

struct InitialData {
    ScalarFn2 eval;
    /// Exact average over an axis-aligned rectangle (xlo,xhi,ylo,yhi);
    /// null means "integrate eval numerically".
    std::function<double(double, double, double, double)> rect_average;
    double average_on(double xlo, double xhi, double ylo, double yhi) const;
};

struct ManufacturedCase {
    std::string name;
    Rect domain;
    double horizon = 1.0;
    FluxFunction flux;
    VelocityField velocity;
    InitialData initial;
    ScalarFn3 exact;   ///< null when no closed-form solution exists
    ScalarFn3 source;  ///< null means zero
};

/// S(t,x,y) with S = d_t alpha + div(u f(alpha)) along the case's exact
/// solution; zero for homogeneous cases.
double manufactured_source(const ManufacturedCase& c, double t, double x, double y);

/// Fully nonlinear flux F(t,x,z) = (F1,F2).
struct NonlinearFluxF {
    ScalarFn4 F1, F2;
    double lipschitz_z = 0.0;
    ScalarFn4 div_x;  ///< dx F1 + dy F2 at fixed z
};

struct SplitFunctions {
    ScalarFn4 a, b, c, d;  ///< F1 = a+b, F2 = c+d; a,c nondecreasing, b,d nonincreasing in z
    double M = 0.0;
};

/// Monotone splitting a=(F1+Mz)/2, b=(F1-Mz)/2, c=(F2+Mz)/2, d=(F2-Mz)/2.
/// The monotonicity of the four parts is verified by sampled difference
/// quotients over box x [0,horizon]; M below Lip(F) fails that check and
/// throws std::invalid_argument.
SplitFunctions make_split(const NonlinearFluxF& F, double M, const Rect& box, double horizon);

struct NonlinearCase {
    std::string name;
    Rect domain;
    double horizon = 1.0;
    NonlinearFluxF flux;
    InitialData initial;
    ScalarFn3 exact;
    ScalarFn3 source;
};

/// Built-in cases: ex1-linear, ex1-sinusoidal, ex2-linear, ex2-sinusoidal,
/// despres. (ex3-nonlinear lives behind make_ex3.)
ManufacturedCase make_case(const std::string& name);
NonlinearCase make_ex3();
std::vector<std::string> builtin_case_names();

}  // namespace fvbv
