#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "fvbv/fv2d.hpp"
#include "fvbv/metrics.hpp"

using namespace fvbv;

namespace {

std::shared_ptr<const CartesianGrid2D> grid(const Rect& r, int nx, int ny) {
    return std::make_shared<const CartesianGrid2D>(uniform_grid(r, nx, ny));
}

VelocityField constant_velocity(double a, double b) {
    VelocityField v;
    v.u = [a](double, double, double) { return a; };
    v.v = [b](double, double, double) { return b; };
    v.divergence = [](double, double, double) { return 0.0; };
    v.sup_bound = std::max(std::abs(a), std::abs(b));
    return v;
}

VelocityField random_velocity(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double c1 = u(rng), c2 = u(rng), c3 = u(rng), c4 = u(rng);
    VelocityField v;
    v.u = [=](double t, double x, double y) {
        return c1 * std::sin(M_PI * x) * std::cos(M_PI * y) + c2 * t * x;
    };
    v.v = [=](double t, double x, double y) {
        return c3 * std::cos(M_PI * x) * std::sin(M_PI * y) + c4 * (1.0 - t) * y;
    };
    v.sup_bound = std::abs(c1) + std::abs(c2) + std::abs(c3) + std::abs(c4) + 1.0;
    return v;
}

}  // namespace

TEST_CASE("project_initial: constants and Heaviside data") {
    auto g = grid({0, 1, 0, 1}, 1, 1);
    InitialData ones;
    ones.eval = [](double, double) { return 1.0; };
    CHECK(project_initial(ones, g).values[0] == doctest::Approx(1.0).epsilon(1e-15));

    InitialData heaviside;
    heaviside.eval = [](double x, double) { return x > 0.5 ? 1.0 : 0.0; };
    heaviside.rect_average = [](double xlo, double xhi, double, double) {
        if (0.5 <= xlo) return 1.0;
        if (0.5 >= xhi) return 0.0;
        return (xhi - 0.5) / (xhi - xlo);
    };
    CHECK(project_initial(heaviside, g).values[0] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("project_initial: smooth data against a composite-midpoint oracle") {
    // small cells keep the 20x20 midpoint oracle itself below 1e-8
    auto g = grid({0, 0.02, 0, 0.02}, 4, 4);
    InitialData init;
    init.eval = [](double x, double y) { return std::exp(x + y); };
    const DiscreteField2D f = project_initial(init, g);
    const int n = 20;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            double acc = 0.0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const double x = g->x_edges[i] + g->kx[i] * (a + 0.5) / n;
                    const double y = g->y_edges[j] + g->hy[j] * (b + 0.5) / n;
                    acc += init.eval(x, y);
                }
            CHECK(f.at(i, j) == doctest::Approx(acc / (n * n)).epsilon(1e-8));
        }
}

TEST_CASE("max_timestep formula") {
    const auto g = uniform_grid({0, 1, 0, 1}, 8, 8);  // k = h = 1/8
    CHECK(max_timestep(g, 1.0, 1.0) == doctest::Approx(0.125 / 8).epsilon(1e-14));
    CHECK(max_timestep(g, 1.0, 2.0) == doctest::Approx(0.5 * max_timestep(g, 1.0, 1.0)).epsilon(1e-14));
    CHECK(std::isinf(max_timestep(g, 1.0, 0.0)));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> w(0.05, 1.0);
    std::vector<double> xe{0.0}, ye{0.0};
    for (int i = 0; i < 7; ++i) xe.push_back(xe.back() + w(rng));
    for (int j = 0; j < 5; ++j) ye.push_back(ye.back() + w(rng));
    const auto gr = build_cartesian(xe, ye);
    double inv = 0.0;  // exhaustive oracle over all (i,j)
    for (double k : gr.kx)
        for (double h : gr.hy) inv = std::max(inv, 1.0 / k + 1.0 / h);
    CHECK(max_timestep(gr, 2.0, 0.3) == doctest::Approx(1.0 / (4.0 * inv * 2.0 * 0.3)).epsilon(1e-14));
}

TEST_CASE("step: zero velocity and zero source is the identity") {
    auto g = grid({-1, 1, -1, 1}, 3, 3);
    DiscreteField2D f;
    f.grid = g;
    f.values = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    SchemeConfig cfg;
    cfg.f = FluxFunction::linear();
    cfg.g = godunov(cfg.f);
    cfg.velocity = constant_velocity(0.0, 0.0);
    const DiscreteField2D out = step(f, cfg, 0.0, 0.1);
    for (int k = 0; k < 9; ++k) CHECK(out.values[k] == f.values[k]);
}

TEST_CASE("step: hand-evaluated upwind update on a 2x2 grid") {
    auto g = grid({0, 1, 0, 1}, 2, 2);  // k = h = 1/2
    DiscreteField2D f;
    f.grid = g;
    f.values = {0.2, 0.9, 0.4, 0.7};  // a00, a10, a01, a11
    SchemeConfig cfg;
    cfg.f = FluxFunction::linear();
    cfg.g = godunov(cfg.f);
    cfg.velocity = constant_velocity(1.0, 0.0);
    const double delta = 0.05;
    const double mu = delta / 0.5;

    SUBCASE("closed boundary: only interior faces carry flux") {
        const DiscreteField2D out = step(f, cfg, 0.0, delta);
        CHECK(out.at(0, 0) == doctest::Approx(0.2 - mu * 0.2).epsilon(1e-13));
        CHECK(out.at(1, 0) == doctest::Approx(0.9 - mu * (0.0 - 0.2)).epsilon(1e-13));
        CHECK(out.at(0, 1) == doctest::Approx(0.4 - mu * 0.4).epsilon(1e-13));
        CHECK(out.at(1, 1) == doctest::Approx(0.7 - mu * (0.0 - 0.4)).epsilon(1e-13));
    }
    SUBCASE("ghost inflow: full upwind stencil") {
        cfg.closure = BoundaryClosure::exact_inflow;
        cfg.ghost = [](double, double, double, double, double) { return 0.1; };
        const DiscreteField2D out = step(f, cfg, 0.0, delta);
        CHECK(out.at(0, 0) == doctest::Approx(0.2 - mu * (0.2 - 0.1)).epsilon(1e-13));
        CHECK(out.at(1, 0) == doctest::Approx(0.9 - mu * (0.9 - 0.2)).epsilon(1e-13));
        CHECK(out.at(0, 1) == doctest::Approx(0.4 - mu * (0.4 - 0.1)).epsilon(1e-13));
        CHECK(out.at(1, 1) == doctest::Approx(0.7 - mu * (0.7 - 0.4)).epsilon(1e-13));
    }
}

TEST_CASE("step: refuses past the CFL bound") {
    auto g = grid({0, 1, 0, 1}, 8, 8);
    DiscreteField2D f;
    f.grid = g;
    f.values.assign(64, 1.0);
    SchemeConfig cfg;
    cfg.f = FluxFunction::linear();
    cfg.g = godunov(cfg.f);
    cfg.velocity = constant_velocity(1.0, 1.0);
    const double dmax = max_timestep(*g, 1.0, 1.0);
    CHECK_THROWS_AS(step(f, cfg, 0.0, 1.01 * dmax), CflError);
    CHECK_NOTHROW(step(f, cfg, 0.0, 0.99 * dmax));
}

TEST_CASE("run: table-1 setup reproduces frozen reference values") {
    // oracle values computed with an independent scalar implementation of
    // the same scheme (4x4 grid, delta = 1/4, T = 1)
    const auto c = make_case("ex1-linear");
    auto g = grid(c.domain, 4, 4);
    SchemeConfig cfg;
    cfg.f = c.flux;
    cfg.g = godunov(c.flux);
    cfg.velocity = c.velocity;
    cfg.source = c.source;
    cfg.delta = 0.25;
    const auto res = run(project_initial(c.initial, g), cfg, 1.0);
    CHECK(res.trace.steps == 4);
    const auto e = error_norms(res.final, c.exact, 1.0);
    CHECK(e.l1 == doctest::Approx(4.258805347049e-02).epsilon(1e-9));
    CHECK(e.linf == doctest::Approx(3.775791055228e-02).epsilon(1e-9));
    CHECK(e.l2 == doctest::Approx(2.842709618958e-02).epsilon(1e-9));
    CHECK(bv_xy(res.final) == doctest::Approx(7.742376806223e+00).epsilon(1e-9));
}

TEST_CASE("step_convex agrees with step on random instances") {
    std::mt19937_64 rng(57);
    std::uniform_real_distribution<double> u(-1.0, 1.0), w(0.1, 0.5);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> xe{0.0}, ye{0.0};
        const int nx = 3 + static_cast<int>(3 * (u(rng) + 1)), ny = 3 + static_cast<int>(2 * (u(rng) + 1));
        for (int i = 0; i < nx; ++i) xe.push_back(xe.back() + w(rng));
        for (int j = 0; j < ny; ++j) ye.push_back(ye.back() + w(rng));
        auto g = std::make_shared<const CartesianGrid2D>(build_cartesian(xe, ye));
        DiscreteField2D f;
        f.grid = g;
        f.values.resize(static_cast<std::size_t>(nx) * ny);
        for (double& v : f.values) v = u(rng);

        SchemeConfig cfg;
        cfg.f = (rep % 2 == 0) ? FluxFunction::linear() : FluxFunction::sinusoidal();
        cfg.g = godunov(cfg.f);
        cfg.velocity = random_velocity(rng);
        if (rep % 3 == 0)
            cfg.source = [](double t, double x, double y) { return std::sin(x + y) + t; };
        if (rep % 4 == 0) {
            cfg.closure = BoundaryClosure::exact_inflow;
            cfg.ghost = [](double t, double xlo, double, double ylo, double) {
                return 0.3 + 0.1 * std::sin(xlo + ylo + t);
            };
        }
        const double delta = 0.5 * max_timestep(*g, cfg.g.lipschitz, cfg.velocity.sup_bound);
        const DiscreteField2D a = step(f, cfg, 0.2, 0.2 + delta);
        const DiscreteField2D b = step_convex(f, cfg, 0.2, 0.2 + delta);
        double dmax = 0.0;
        for (std::size_t k = 0; k < a.values.size(); ++k)
            dmax = std::max(dmax, std::abs(a.values[k] - b.values[k]));
        CHECK(dmax <= 1e-12);
    }
}

TEST_CASE("step_convex: constant states stay finite and fixed") {
    auto g = grid({0, 1, 0, 1}, 4, 4);
    DiscreteField2D f;
    f.grid = g;
    f.values.assign(16, 0.6);
    SchemeConfig cfg;
    cfg.f = FluxFunction::sinusoidal();
    cfg.g = godunov(cfg.f);
    cfg.velocity = constant_velocity(0.5, -0.25);  // divergence-free
    cfg.closure = BoundaryClosure::exact_inflow;
    cfg.ghost = [](double, double, double, double, double) { return 0.6; };
    const double delta = 0.5 * max_timestep(*g, cfg.g.lipschitz, cfg.velocity.sup_bound);
    // D(a,a) = 0 by definition: the convex form must not divide by zero
    const DiscreteField2D out = step_convex(f, cfg, 0.0, delta);
    for (double v : out.values) CHECK(v == doctest::Approx(0.6).epsilon(1e-13));
}

TEST_CASE("run: zero steps returns the initial field") {
    auto g = grid({0, 1, 0, 1}, 2, 2);
    DiscreteField2D f;
    f.grid = g;
    f.values = {1, 2, 3, 4};
    SchemeConfig cfg;
    cfg.f = FluxFunction::linear();
    cfg.g = godunov(cfg.f);
    cfg.velocity = constant_velocity(1.0, 1.0);
    cfg.delta = 0.01;
    const auto res = run(f, cfg, 0.0);
    CHECK(res.trace.steps == 0);
    CHECK(res.final.values == f.values);
}

TEST_CASE("run: mass is conserved with closed boundaries") {
    const auto c = make_case("ex2-sinusoidal");  // u.n = 0 on the boundary
    auto g = grid(c.domain, 6, 6);
    DiscreteField2D f;
    f.grid = g;
    f.values.resize(36);
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double& v : f.values) v = u(rng);
    SchemeConfig cfg;
    cfg.f = c.flux;
    cfg.g = godunov(c.flux);
    cfg.velocity = c.velocity;
    const double m0 = total_mass(f);
    double t = 0.0;
    const double delta = 0.9 * max_timestep(*g, cfg.g.lipschitz, cfg.velocity.sup_bound);
    for (int n = 0; n < 100; ++n) {
        f = step(f, cfg, t, t + delta);
        t += delta;
    }
    CHECK(total_mass(f) == doctest::Approx(m0).epsilon(1e-12));
}

TEST_CASE("run: max principle for a divergence-free velocity") {
    auto g = grid({0, 1, 0, 1}, 5, 5);
    DiscreteField2D f;
    f.grid = g;
    f.values.resize(25);
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> u(0.2, 0.8);
    for (double& v : f.values) v = u(rng);
    SchemeConfig cfg;
    cfg.f = FluxFunction::sinusoidal();
    cfg.g = godunov(cfg.f);
    cfg.velocity = constant_velocity(1.0, 0.5);
    cfg.closure = BoundaryClosure::exact_inflow;
    cfg.ghost = [](double, double, double, double, double) { return 0.5; };  // inside the range
    const double lo = *std::min_element(f.values.begin(), f.values.end());
    const double hi = *std::max_element(f.values.begin(), f.values.end());
    const double delta = 0.95 * max_timestep(*g, cfg.g.lipschitz, cfg.velocity.sup_bound);
    double t = 0.0;
    for (int n = 0; n < 60; ++n) {
        f = step(f, cfg, t, t + delta);
        t += delta;
        for (double v : f.values) {
            CHECK(v >= lo - 1e-12);
            CHECK(v <= hi + 1e-12);
        }
    }
}

TEST_CASE("run: sup-norm growth bound for a homogeneous divergent case") {
    const auto c = make_case("ex2-sinusoidal");
    auto g = grid(c.domain, 8, 8);
    DiscreteField2D f = project_initial(c.initial, g);
    SchemeConfig cfg;
    cfg.f = c.flux;
    cfg.g = godunov(c.flux);
    cfg.velocity = c.velocity;
    cfg.delta = 0.9 * max_timestep(*g, cfg.g.lipschitz, cfg.velocity.sup_bound);
    const auto res = run(f, cfg, 2.0);
    // |div u(t,.)|_inf <= 2 pi / 20; over (0,T): L1_t bound = 2 * that
    const double divL1 = 2.0 * 2.0 * M_PI / 20.0;
    const double a0 = 1.0;  // |alpha_0|_inf
    const double f0 = 0.0;  // f(0) = sin(0)
    const double bound = std::exp(c.flux.lipschitz * divL1) * (a0 + f0 * divL1);
    for (double li : res.trace.linf) CHECK(li <= bound + 1e-12);
}

TEST_CASE("run: constant state with divergence-free velocity is a fixed point") {
    auto g = grid({0, 1, 0, 1}, 4, 4);
    DiscreteField2D f;
    f.grid = g;
    f.values.assign(16, 0.37);
    SchemeConfig cfg;
    cfg.f = FluxFunction::linear();
    cfg.g = godunov(cfg.f);
    cfg.velocity = constant_velocity(0.8, -0.6);
    cfg.closure = BoundaryClosure::exact_inflow;
    cfg.ghost = [](double, double, double, double, double) { return 0.37; };
    const double delta = 0.9 * max_timestep(*g, cfg.g.lipschitz, cfg.velocity.sup_bound);
    const DiscreteField2D out = step(f, cfg, 0.0, delta);
    for (double v : out.values) CHECK(v == doctest::Approx(0.37).epsilon(1e-14));
}
