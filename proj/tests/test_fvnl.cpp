#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "fvbv/fv2d.hpp"
#include "fvbv/fvnl.hpp"
#include "fvbv/metrics.hpp"

using namespace fvbv;

namespace {

std::shared_ptr<const CartesianGrid2D> grid(const Rect& r, int nx, int ny) {
    return std::make_shared<const CartesianGrid2D>(uniform_grid(r, nx, ny));
}

}  // namespace

TEST_CASE("cfl_nonlinear formula") {
    const auto g = uniform_grid({0, 1, 0, 1}, 8, 8);
    CHECK(cfl_nonlinear(g, 1.0) == doctest::Approx(0.125 / 8).epsilon(1e-14));
    CHECK(cfl_nonlinear(g, 2.0) == doctest::Approx(0.5 * cfl_nonlinear(g, 1.0)).epsilon(1e-14));

    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> w(0.05, 1.0);
    std::vector<double> xe{0.0}, ye{0.0};
    for (int i = 0; i < 6; ++i) xe.push_back(xe.back() + w(rng));
    for (int j = 0; j < 4; ++j) ye.push_back(ye.back() + w(rng));
    const auto gr = build_cartesian(xe, ye);
    double inv = 0.0;  // brute-force index scan
    for (double k : gr.kx)
        for (double h : gr.hy) inv = std::max(inv, 1.0 / k + 1.0 / h);
    CHECK(cfl_nonlinear(gr, 1.7) == doctest::Approx(1.0 / (4.0 * 1.7 * inv)).epsilon(1e-14));
}

TEST_CASE("step_nonlinear: vanishing flux is the identity") {
    auto g = grid({-1, 1, -1, 1}, 4, 3);
    DiscreteField2D f;
    f.grid = g;
    f.values.resize(12);
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double& v : f.values) v = u(rng);
    SplitScheme sch;
    auto zero = [](double, double, double, double) { return 0.0; };
    sch.split = {zero, zero, zero, zero, 0.0};
    sch.lip_F = 0.0;
    const DiscreteField2D out = step_nonlinear(f, sch, 0.0, 0.1);
    for (std::size_t k = 0; k < f.values.size(); ++k) CHECK(out.values[k] == f.values[k]);
}

TEST_CASE("step_nonlinear: F = (z, 0) reduces to first-order upwind") {
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> u(-1.0, 1.0), w(0.2, 0.6);
    std::vector<double> xe{0.0}, ye{0.0};
    for (int i = 0; i < 5; ++i) xe.push_back(xe.back() + w(rng));
    for (int j = 0; j < 4; ++j) ye.push_back(ye.back() + w(rng));
    auto g = std::make_shared<const CartesianGrid2D>(build_cartesian(xe, ye));
    DiscreteField2D f;
    f.grid = g;
    f.values.resize(static_cast<std::size_t>(g->nx()) * g->ny());
    for (double& v : f.values) v = u(rng);

    // split of F1 = z with the zero transverse component kept exactly zero
    SplitScheme sch;
    sch.split.a = [](double, double, double, double z) { return z; };
    sch.split.b = [](double, double, double, double) { return 0.0; };
    sch.split.c = [](double, double, double, double) { return 0.0; };
    sch.split.d = [](double, double, double, double) { return 0.0; };
    sch.split.M = 1.0;
    sch.lip_F = 1.0;

    SchemeConfig ref;
    ref.f = FluxFunction::linear();
    ref.g = godunov(ref.f);
    ref.velocity.u = [](double, double, double) { return 1.0; };
    ref.velocity.v = [](double, double, double) { return 0.0; };
    ref.velocity.sup_bound = 1.0;
    ref.closure = BoundaryClosure::exact_inflow;
    // the nonlinear scheme mirrors the boundary state; feed the reference
    // solver the same ghost values
    DiscreteField2D cur = f;
    ref.ghost = [&cur, g](double, double xlo, double xhi, double ylo, double) {
        const double ymid = ylo + 1e-12;
        int j = 0;
        while (j + 1 < g->ny() && g->y_edges[j + 1] < ymid) ++j;
        return (xhi <= g->x_edges.front() + 1e-12) ? cur.at(0, j) : cur.at(g->nx() - 1, j);
    };

    const double delta = 0.4 * cfl_nonlinear(*g, 1.0);
    double t = 0.1;
    for (int n = 0; n < 3; ++n) {
        const DiscreteField2D nl = step_nonlinear(cur, sch, t, t + delta);
        const DiscreteField2D up = step(cur, ref, t, t + delta);
        double dmax = 0.0;
        for (std::size_t k = 0; k < nl.values.size(); ++k)
            dmax = std::max(dmax, std::abs(nl.values[k] - up.values[k]));
        CHECK(dmax <= 1e-12);
        cur = nl;
        t += delta;
    }
}

TEST_CASE("step_nonlinear: scalar-M split matches upwind on y-independent data") {
    auto g = grid({0, 1, 0, 1}, 6, 5);
    DiscreteField2D f;
    f.grid = g;
    f.values.resize(30);
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 6; ++i) {
        const double v = u(rng);
        for (int j = 0; j < 5; ++j) f.at(i, j) = v;
    }
    NonlinearFluxF F;
    F.F1 = [](double, double, double, double z) { return z; };
    F.F2 = [](double, double, double, double) { return 0.0; };
    F.lipschitz_z = 1.0;
    SplitScheme sch;
    sch.split = make_split(F, 1.0, {0, 1, 0, 1}, 1.0);
    sch.lip_F = 1.0;

    SchemeConfig ref;
    ref.f = FluxFunction::linear();
    ref.g = godunov(ref.f);
    ref.velocity.u = [](double, double, double) { return 1.0; };
    ref.velocity.v = [](double, double, double) { return 0.0; };
    ref.velocity.sup_bound = 1.0;
    ref.closure = BoundaryClosure::exact_inflow;
    ref.ghost = [&f, g](double, double xlo, double xhi, double, double) {
        return (xhi <= g->x_edges.front() + 1e-12) ? f.at(0, 0) : f.at(g->nx() - 1, 0);
    };

    const double delta = 0.4 * cfl_nonlinear(*g, 1.0);
    const DiscreteField2D nl = step_nonlinear(f, sch, 0.0, delta);
    const DiscreteField2D up = step(f, ref, 0.0, delta);
    double dmax = 0.0;
    for (std::size_t k = 0; k < nl.values.size(); ++k)
        dmax = std::max(dmax, std::abs(nl.values[k] - up.values[k]));
    CHECK(dmax <= 1e-12);
}

TEST_CASE("step_nonlinear: monotone in every neighbor under the bound") {
    const auto c = make_ex3();
    auto g = grid(c.domain, 5, 5);
    SplitScheme sch;
    sch.split = make_split(c.flux, 2.0, c.domain, c.horizon);
    sch.lip_F = 2.0;
    std::mt19937_64 rng(89);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    DiscreteField2D f;
    f.grid = g;
    f.values.resize(25);
    for (double& v : f.values) v = u(rng);
    const double delta = 0.9 / ((sch.lip_F + sch.split.M) * (2.0 / 0.4));
    const double t = 0.3;
    const DiscreteField2D base = step_nonlinear(f, sch, t, t + delta);
    for (int k = 0; k < 25; ++k) {
        DiscreteField2D bumped = f;
        bumped.values[k] += 1e-3;
        const DiscreteField2D out = step_nonlinear(bumped, sch, t, t + delta);
        for (int m = 0; m < 25; ++m) CHECK(out.values[m] >= base.values[m] - 1e-13);
    }
}

TEST_CASE("step_nonlinear: refuses past the splitting bound") {
    const auto c = make_ex3();
    auto g = grid(c.domain, 4, 4);
    SplitScheme sch;
    sch.split = make_split(c.flux, 2.0, c.domain, c.horizon);
    sch.lip_F = 2.0;
    DiscreteField2D f;
    f.grid = g;
    f.values.assign(16, 1.0);
    const double dmax = 1.0 / ((sch.lip_F + sch.split.M) * (2.0 / 0.5));
    CHECK_THROWS_AS(step_nonlinear(f, sch, 0.0, 1.02 * dmax), CflError);
    CHECK_NOTHROW(step_nonlinear(f, sch, 0.0, 0.98 * dmax));
}

TEST_CASE("run_nonlinear: example 3 coarse level reproduces frozen values") {
    // frozen from an independent scalar implementation of the same scheme
    const auto c = make_ex3();
    auto g = grid(c.domain, 4, 4);
    SplitScheme sch;
    sch.split = make_split(c.flux, c.flux.lipschitz_z, c.domain, c.horizon);
    sch.lip_F = c.flux.lipschitz_z;
    sch.source = c.source;
    sch.delta = 3.97e-2;
    const auto res = run_nonlinear(project_initial(c.initial, g), sch, 1.0);
    CHECK(res.trace.steps == 26);
    const auto e = error_norms(res.final, c.exact, 1.0);
    CHECK(e.l1 == doctest::Approx(9.063951504173e-01).epsilon(1e-9));
    CHECK(bv_xy(res.final) == doctest::Approx(5.496695784231e+00).epsilon(1e-9));
}

TEST_CASE("run_nonlinear: example 3 errors shrink under refinement") {
    const auto c = make_ex3();
    double prev = 0.0;
    for (int n : {4, 8, 16}) {
        auto g = grid(c.domain, n, n);
        SplitScheme sch;
        sch.split = make_split(c.flux, c.flux.lipschitz_z, c.domain, c.horizon);
        sch.lip_F = c.flux.lipschitz_z;
        sch.source = c.source;
        sch.delta = 0.16 / n;
        const auto res = run_nonlinear(project_initial(c.initial, g), sch, 1.0);
        const auto e = error_norms(res.final, c.exact, 1.0);
        if (prev > 0.0) {
            const double order = std::log(prev / e.l1) / std::log(2.0);
            CHECK(order > 0.4);
        }
        prev = e.l1;
    }
}
