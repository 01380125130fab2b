#pragma once

#include <cmath>

namespace fvbv::quad {

// 3-point Gauss-Legendre on [-1,1]
inline const double pts[3] = {-std::sqrt(3.0 / 5.0), 0.0, std::sqrt(3.0 / 5.0)};
inline const double wts[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

/// Average of f over [a,b].
template <class F>
double avg1(F&& f, double a, double b) {
    const double m = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 3; ++i) s += wts[i] * f(m + h * pts[i]);
    return 0.5 * s;
}

/// Average of f(x,y) over [ax,bx] x [ay,by].
template <class F>
double avg2(F&& f, double ax, double bx, double ay, double by) {
    const double mx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
    const double my = 0.5 * (ay + by), hy = 0.5 * (by - ay);
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += wts[i] * wts[j] * f(mx + hx * pts[i], my + hy * pts[j]);
    return 0.25 * s;
}

/// Average of f(t,x,y) over [at,bt] x [ax,bx] x [ay,by].
template <class F>
double avg3(F&& f, double at, double bt, double ax, double bx, double ay, double by) {
    const double mt = 0.5 * (at + bt), ht = 0.5 * (bt - at);
    const double mx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
    const double my = 0.5 * (ay + by), hy = 0.5 * (by - ay);
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                s += wts[i] * wts[j] * wts[k] * f(mt + ht * pts[i], mx + hx * pts[j], my + hy * pts[k]);
    return 0.125 * s;
}

}  // namespace fvbv::quad
