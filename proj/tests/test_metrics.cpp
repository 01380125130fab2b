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

DiscreteField2D field_of(std::shared_ptr<const CartesianGrid2D> g, std::vector<double> vals) {
    DiscreteField2D f;
    f.grid = std::move(g);
    f.values = std::move(vals);
    return f;
}

// 1D total variation by partition sampling; for a piecewise-constant row
// this is the plain jump sum, evaluated through a different code path
double tv_oracle(const std::vector<double>& cell_vals, const std::vector<double>& edges) {
    auto value_at = [&](double x) {
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            if (x < edges[i + 1]) return cell_vals[i];
        return cell_vals.back();
    };
    const int samples = 10 * static_cast<int>(cell_vals.size());
    double tv = 0.0, prev = value_at(edges.front() + 1e-12);
    for (int k = 1; k <= samples; ++k) {
        const double x = edges.front() + (edges.back() - edges.front()) * (k + 0.5) / (samples + 1);
        const double v = value_at(x);
        tv += std::abs(v - prev);
        prev = v;
    }
    return tv;
}

}  // namespace

TEST_CASE("bv_xy: constant field vanishes") {
    auto g = grid({-1, 1, -1, 1}, 5, 7);
    DiscreteField2D f = field_of(g, std::vector<double>(35, 3.14));
    CHECK(bv_xy(f) == 0.0);
}

TEST_CASE("bv_xy: axis-aligned jump equals jump times interface length") {
    auto g = grid({-1, 1, -1, 1}, 4, 4);
    DiscreteField2D f = field_of(g, std::vector<double>(16, 0.0));
    for (int j = 0; j < 4; ++j)
        for (int i = 2; i < 4; ++i) f.at(i, j) = 1.0;  // indicator of {x > 0}
    CHECK(bv_xy(f) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(bv_l1y_bvx(f) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(bv_l1x_bvy(f) == 0.0);
}

TEST_CASE("bv_xy: random field matches row/column partition-sup oracle") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0), w(0.1, 1.0);
    std::vector<double> xe{0.0}, ye{0.0};
    for (int i = 0; i < 6; ++i) xe.push_back(xe.back() + w(rng));
    for (int j = 0; j < 9; ++j) ye.push_back(ye.back() + w(rng));
    auto g = std::make_shared<const CartesianGrid2D>(build_cartesian(xe, ye));
    DiscreteField2D f;
    f.grid = g;
    f.values.resize(6 * 9);
    for (double& v : f.values) v = u(rng);

    double oracle = 0.0;
    for (int j = 0; j < g->ny(); ++j) {
        std::vector<double> row(g->nx());
        for (int i = 0; i < g->nx(); ++i) row[i] = f.at(i, j);
        oracle += g->hy[j] * tv_oracle(row, g->x_edges);
    }
    for (int i = 0; i < g->nx(); ++i) {
        std::vector<double> col(g->ny());
        for (int j = 0; j < g->ny(); ++j) col[j] = f.at(i, j);
        oracle += g->kx[i] * tv_oracle(col, g->y_edges);
    }
    CHECK(bv_xy(f) == doctest::Approx(oracle).epsilon(1e-13));
}

TEST_CASE("bv_xy: homogeneity and triangle inequality") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto g = grid({0, 2, 0, 1}, 6, 5);
    for (int rep = 0; rep < 20; ++rep) {
        DiscreteField2D a = field_of(g, std::vector<double>(30));
        DiscreteField2D b = field_of(g, std::vector<double>(30));
        for (int k = 0; k < 30; ++k) {
            a.values[k] = u(rng);
            b.values[k] = u(rng);
        }
        const double c = 3.0 * u(rng);
        DiscreteField2D ca = a, sum = a;
        for (int k = 0; k < 30; ++k) {
            ca.values[k] = c * a.values[k];
            sum.values[k] = a.values[k] + b.values[k];
        }
        CHECK(bv_xy(ca) == doctest::Approx(std::abs(c) * bv_xy(a)).epsilon(1e-12));
        CHECK(bv_xy(sum) <= bv_xy(a) + bv_xy(b) + 1e-12);
    }
}

TEST_CASE("bv_time: stationary and single-cell traces") {
    auto g1 = grid({0, 1, 0, 1}, 1, 1);
    std::vector<DiscreteField2D> trace;
    for (double v : {0.0, 1.0, 0.0}) trace.push_back(field_of(g1, {v}));
    CHECK(bv_time(trace) == doctest::Approx(2.0).epsilon(1e-15));

    std::vector<DiscreteField2D> flat(4, field_of(g1, {0.7}));
    CHECK(bv_time(flat) == 0.0);
}

TEST_CASE("bv_time: random trace against a per-cell 1d oracle") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto g = grid({0, 1, 0, 2}, 3, 2);
    std::vector<DiscreteField2D> trace;
    for (int n = 0; n < 7; ++n) {
        DiscreteField2D f = field_of(g, std::vector<double>(6));
        for (double& v : f.values) v = u(rng);
        trace.push_back(f);
    }
    double oracle = 0.0;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 3; ++i) {
            double tv = 0.0;
            for (std::size_t n = 1; n < trace.size(); ++n)
                tv += std::abs(trace[n].at(i, j) - trace[n - 1].at(i, j));
            oracle += g->cell_area(i, j) * tv;
        }
    CHECK(bv_time(trace) == doctest::Approx(oracle).epsilon(1e-13));
}

TEST_CASE("error_norms: projected exact field has zero error") {
    const auto exact = [](double t, double x, double y) { return std::exp(t * (x + y)); };
    auto g = grid({-1, 1, -1, 1}, 5, 5);
    InitialData init;
    init.eval = [&](double x, double y) { return exact(0.8, x, y); };
    DiscreteField2D f = project_initial(init, g);
    const auto e = error_norms(f, exact, 0.8);
    CHECK(e.linf < 1e-14);
    CHECK(e.l1 < 1e-14);
    CHECK(e.l2 < 1e-14);
}

TEST_CASE("error_norms: single-cell perturbation of a unit-area cell") {
    auto g = grid({0, 2, 0, 2}, 2, 2);  // each cell has unit area
    DiscreteField2D f = field_of(g, std::vector<double>(4, 0.0));
    f.at(1, 0) = 1e-3;
    const auto e = error_norms(f, [](double, double, double) { return 0.0; }, 0.0);
    CHECK(e.linf == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(e.l1 == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(e.l2 == doctest::Approx(1e-3).epsilon(1e-12));
}

TEST_CASE("error_norms ordering: L1 <= sqrt|O| L2 <= |O| Linf") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto g = grid({0, 3, 0, 2}, 4, 6);
    const double area = 6.0;
    for (int rep = 0; rep < 20; ++rep) {
        DiscreteField2D f = field_of(g, std::vector<double>(24));
        for (double& v : f.values) v = u(rng);
        const auto e = error_norms(f, [](double, double, double) { return 0.0; }, 0.0);
        CHECK(e.l1 <= std::sqrt(area) * e.l2 + 1e-12);
        CHECK(std::sqrt(area) * e.l2 <= area * e.linf + 1e-12);
    }
}

TEST_CASE("rate: basic identities") {
    CHECK(*rate(1.0, 2.0, 0.5, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(*rate(5.0, 5.0, 0.5, 1.0) == 0.0);
    // BV rate between the first two tabulated seminorms of the smooth case
    CHECK(*rate(23.1, 20.2, 0.25, 0.5) == doctest::Approx(-0.192).epsilon(0.02));
    CHECK(!rate(0.0, 1.0, 0.5, 1.0).has_value());
    CHECK(!rate(-1.0, 1.0, 0.5, 1.0).has_value());
    CHECK(!rate(1.0, 1.0, 0.5, 0.5).has_value());
}

TEST_CASE("bv_xyz: constant and axis-step fields") {
    auto g = std::make_shared<const CartesianGrid3D>(uniform_grid3d({0, 1, 0, 2, 0, 3}, 4, 2, 3));
    DiscreteField3D f;
    f.grid = g;
    f.values.assign(4 * 2 * 3, 1.0);
    CHECK(bv_xyz(f) == 0.0);
    // step in x at the interface i=2: area = height * depth = 6, jump 2.5
    for (int m = 0; m < 3; ++m)
        for (int j = 0; j < 2; ++j)
            for (int i = 2; i < 4; ++i) f.at(i, j, m) = 3.5;
    CHECK(bv_xyz(f) == doctest::Approx(2.5 * 6.0).epsilon(1e-13));
}
