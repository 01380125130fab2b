#include "fvbv/physics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fvbv/quadrature.hpp"

namespace fvbv {

FluxFunction FluxFunction::linear() {
    FluxFunction f;
    f.tag = Tag::linear;
    f.eval = [](double s) { return s; };
    f.lipschitz = 1.0;
    return f;
}

FluxFunction FluxFunction::sinusoidal() {
    FluxFunction f;
    f.tag = Tag::sinusoidal;
    f.eval = [](double s) { return std::sin(2.0 * M_PI * s); };
    f.lipschitz = 2.0 * M_PI;
    return f;
}

namespace {

// extrema of sin(2 pi s) on [lo,hi]: endpoints and critical points s = 1/4 + k/2
double sin_max(double lo, double hi) {
    const double k = std::ceil(lo - 0.25);
    if (0.25 + k <= hi) return 1.0;
    return std::max(std::sin(2.0 * M_PI * lo), std::sin(2.0 * M_PI * hi));
}
double sin_min(double lo, double hi) {
    const double k = std::ceil(lo - 0.75);
    if (0.75 + k <= hi) return -1.0;
    return std::min(std::sin(2.0 * M_PI * lo), std::sin(2.0 * M_PI * hi));
}

double scan_extremum(const ScalarFn1& f, double lo, double hi, bool want_max) {
    double best = f(lo);
    const int n = 256;
    for (int i = 1; i <= n; ++i) {
        const double v = f(lo + (hi - lo) * i / n);
        best = want_max ? std::max(best, v) : std::min(best, v);
    }
    return best;
}

}  // namespace

NumericalFlux godunov(const FluxFunction& f) {
    NumericalFlux g;
    g.lipschitz = f.lipschitz;
    switch (f.tag) {
        case FluxFunction::Tag::linear:
            g.eval = [](double a, double) { return a; };  // f increasing: upwind value
            break;
        case FluxFunction::Tag::sinusoidal:
            g.eval = [](double a, double b) {
                if (a == b) return std::sin(2.0 * M_PI * a);
                return b < a ? sin_max(b, a) : sin_min(a, b);
            };
            break;
        case FluxFunction::Tag::custom:
            g.eval = [fn = f.eval](double a, double b) {
                if (a == b) return fn(a);
                return b < a ? scan_extremum(fn, b, a, true) : scan_extremum(fn, a, b, false);
            };
            break;
    }
    return g;
}

double face_average_velocity(const VelocityField& field, double x0, double y0, double x1,
                             double y1, double t0, double t1) {
    const double dx = x1 - x0, dy = y1 - y0;
    const double len = std::hypot(dx, dy);
    if (!(len > 0.0)) throw std::invalid_argument("face_average_velocity: zero-length segment");
    if (!(t1 > t0)) throw std::invalid_argument("face_average_velocity: empty time window");
    const double nx = dy / len, ny = -dx / len;
    return quad::avg2(
        [&](double t, double s) {
            const double x = x0 + s * dx, y = y0 + s * dy;
            return nx * field.u(t, x, y) + ny * field.v(t, x, y);
        },
        t0, t1, 0.0, 1.0);
}

double InitialData::average_on(double xlo, double xhi, double ylo, double yhi) const {
    if (rect_average) return rect_average(xlo, xhi, ylo, yhi);
    return quad::avg2([&](double x, double y) { return eval(x, y); }, xlo, xhi, ylo, yhi);
}

double manufactured_source(const ManufacturedCase& c, double t, double x, double y) {
    return c.source ? c.source(t, x, y) : 0.0;
}

SplitFunctions make_split(const NonlinearFluxF& F, double M, const Rect& box, double horizon) {
    SplitFunctions s;
    s.M = M;
    s.a = [F1 = F.F1, M](double t, double x, double y, double z) { return 0.5 * (F1(t, x, y, z) + M * z); };
    s.b = [F1 = F.F1, M](double t, double x, double y, double z) { return 0.5 * (F1(t, x, y, z) - M * z); };
    s.c = [F2 = F.F2, M](double t, double x, double y, double z) { return 0.5 * (F2(t, x, y, z) + M * z); };
    s.d = [F2 = F.F2, M](double t, double x, double y, double z) { return 0.5 * (F2(t, x, y, z) - M * z); };

    // sampled difference-quotient check of the required monotonicity
    const int nt = 5, nxy = 7, nz = 24;
    const double zlo = -2.0, zhi = 8.0;
    for (int it = 0; it <= nt; ++it) {
        const double t = horizon * it / nt;
        for (int ix = 0; ix <= nxy; ++ix) {
            const double x = box.xmin + box.width() * ix / nxy;
            for (int iy = 0; iy <= nxy; ++iy) {
                const double y = box.ymin + box.height() * iy / nxy;
                for (int iz = 0; iz < nz; ++iz) {
                    const double z0 = zlo + (zhi - zlo) * iz / nz;
                    const double z1 = zlo + (zhi - zlo) * (iz + 1) / nz;
                    const double tol = 1e-12 * (1.0 + std::abs(M));
                    if (s.a(t, x, y, z1) - s.a(t, x, y, z0) < -tol ||
                        s.c(t, x, y, z1) - s.c(t, x, y, z0) < -tol ||
                        s.b(t, x, y, z1) - s.b(t, x, y, z0) > tol ||
                        s.d(t, x, y, z1) - s.d(t, x, y, z0) > tol)
                        throw std::invalid_argument("make_split: monotonicity violated, M below Lip(F)");
                }
            }
        }
    }
    return s;
}

namespace {

double heaviside_fraction(double lo, double hi, double c) {
    // measure fraction of [lo,hi] above c
    if (c <= lo) return 1.0;
    if (c >= hi) return 0.0;
    return (hi - c) / (hi - lo);
}

ManufacturedCase make_ex1(bool sinusoidal) {
    ManufacturedCase c;
    c.name = sinusoidal ? "ex1-sinusoidal" : "ex1-linear";
    c.domain = {-1.0, 1.0, -1.0, 1.0};
    c.horizon = 1.0;
    c.flux = sinusoidal ? FluxFunction::sinusoidal() : FluxFunction::linear();
    c.velocity.u = [](double t, double x, double y) {
        return t * std::sin(M_PI * x) * std::cos(0.5 * M_PI * y) / 16.0;
    };
    c.velocity.v = [](double t, double x, double y) {
        return t * std::sin(M_PI * y) * std::cos(0.5 * M_PI * x) / 16.0;
    };
    c.velocity.divergence = [](double t, double x, double y) {
        return t * M_PI *
               (std::cos(M_PI * x) * std::cos(0.5 * M_PI * y) +
                std::cos(M_PI * y) * std::cos(0.5 * M_PI * x)) /
               16.0;
    };
    c.velocity.sup_bound = 1.0 / 16.0;
    c.initial.eval = [](double, double) { return 1.0; };
    c.initial.rect_average = [](double, double, double, double) { return 1.0; };
    c.exact = [](double t, double x, double y) { return std::exp(t * (x + y)); };
    if (!sinusoidal) {
        c.source = [vel = c.velocity](double t, double x, double y) {
            const double al = std::exp(t * (x + y));
            return (x + y) * al + al * vel.divergence(t, x, y) +
                   (vel.u(t, x, y) + vel.v(t, x, y)) * t * al;
        };
    } else {
        c.source = [vel = c.velocity](double t, double x, double y) {
            const double al = std::exp(t * (x + y));
            const double dt_al = (x + y) * al;
            const double grad = t * al;  // both components of grad(alpha)
            return dt_al + std::sin(2.0 * M_PI * al) * vel.divergence(t, x, y) +
                   2.0 * M_PI * std::cos(2.0 * M_PI * al) * (vel.u(t, x, y) + vel.v(t, x, y)) * grad;
        };
    }
    return c;
}

ManufacturedCase make_ex2(bool sinusoidal) {
    ManufacturedCase c;
    c.name = sinusoidal ? "ex2-sinusoidal" : "ex2-linear";
    c.domain = {-3.0, 3.0, -3.0, 3.0};
    c.horizon = 2.0;
    c.flux = sinusoidal ? FluxFunction::sinusoidal() : FluxFunction::linear();
    c.initial.eval = [](double x, double y) {
        return 0.5 * (x > -0.25 ? 1.0 : 0.0) + 0.5 * (y > -0.25 ? 1.0 : 0.0);
    };
    c.initial.rect_average = [](double xlo, double xhi, double ylo, double yhi) {
        return 0.5 * heaviside_fraction(xlo, xhi, -0.25) + 0.5 * heaviside_fraction(ylo, yhi, -0.25);
    };
    if (!sinusoidal) {
        c.velocity.u = [](double, double, double) { return 1.0; };
        c.velocity.v = [](double, double, double) { return 1.0; };
        c.velocity.divergence = [](double, double, double) { return 0.0; };
        c.velocity.sup_bound = 1.0;
        c.exact = [a0 = c.initial.eval](double t, double x, double y) { return a0(x - t, y - t); };
    } else {
        c.velocity.u = [](double, double x, double y) {
            return std::sin(M_PI * x) * std::cos(0.5 * M_PI * y) / 20.0;
        };
        c.velocity.v = [](double, double x, double y) {
            return std::sin(M_PI * y) * std::cos(0.5 * M_PI * x) / 20.0;
        };
        c.velocity.divergence = [](double, double x, double y) {
            return M_PI *
                   (std::cos(M_PI * x) * std::cos(0.5 * M_PI * y) +
                    std::cos(M_PI * y) * std::cos(0.5 * M_PI * x)) /
                   20.0;
        };
        c.velocity.sup_bound = 1.0 / 20.0;
        // no closed-form solution; error columns stay empty
    }
    return c;
}

ManufacturedCase make_despres() {
    ManufacturedCase c;
    c.name = "despres";
    c.domain = {-1.0, 1.0, -1.0, 1.0};
    c.horizon = 0.25;
    c.flux = FluxFunction::linear();
    c.velocity.u = [](double, double, double) { return 1.0; };
    c.velocity.v = [](double, double, double) { return 0.0; };
    c.velocity.divergence = [](double, double, double) { return 0.0; };
    c.velocity.sup_bound = 1.0;
    c.initial.eval = [](double x, double) { return x > 0.5 ? 1.0 : 0.0; };
    c.initial.rect_average = [](double xlo, double xhi, double, double) {
        return heaviside_fraction(xlo, xhi, 0.5);
    };
    c.exact = [](double t, double x, double) { return x - t > 0.5 ? 1.0 : 0.0; };
    return c;
}

}  // namespace

ManufacturedCase make_case(const std::string& name) {
    if (name == "ex1-linear") return make_ex1(false);
    if (name == "ex1-sinusoidal") return make_ex1(true);
    if (name == "ex2-linear") return make_ex2(false);
    if (name == "ex2-sinusoidal") return make_ex2(true);
    if (name == "despres") return make_despres();
    throw std::invalid_argument("unknown case: " + name);
}

NonlinearCase make_ex3() {
    NonlinearCase c;
    c.name = "ex3-nonlinear";
    c.domain = {-1.0, 1.0, -1.0, 1.0};
    c.horizon = 1.0;
    c.flux.F1 = [](double t, double x, double, double z) { return std::sin((x - t) * z); };
    c.flux.F2 = [](double t, double, double y, double z) { return std::cos((y - t) * z); };
    // |dz F1| = |x-t| |cos((x-t)z)| <= 2 on (-1,1)^2 x (0,1); same for F2
    c.flux.lipschitz_z = 2.0;
    c.flux.div_x = [](double t, double x, double y, double z) {
        return z * std::cos((x - t) * z) - z * std::sin((y - t) * z);
    };
    c.initial.eval = [](double, double) { return 1.0; };
    c.initial.rect_average = [](double, double, double, double) { return 1.0; };
    c.exact = [](double t, double x, double y) { return std::exp(t * (x + y)); };
    c.source = [](double t, double x, double y) {
        const double al = std::exp(t * (x + y));
        const double dxal = t * al, dyal = t * al;
        const double dxF = al * std::cos((x - t) * al) + (x - t) * std::cos((x - t) * al) * dxal;
        const double dyF = -al * std::sin((y - t) * al) - (y - t) * std::sin((y - t) * al) * dyal;
        return (x + y) * al + dxF + dyF;
    };
    return c;
}

std::vector<std::string> builtin_case_names() {
    return {"ex1-linear", "ex1-sinusoidal", "ex2-linear", "ex2-sinusoidal", "ex3-nonlinear", "despres"};
}

}  // namespace fvbv
