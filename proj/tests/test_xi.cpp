#include <doctest.h>

#include <cmath>

#include "slag/xi.hpp"

using namespace slag;

namespace {

// Independent oracle: the zonal spherical function of the hyperbolic plane
// is the Legendre function P_{-1/2}(cosh t), here computed from its
// integral representation by plain high-resolution trapezoid on the
// circle (the integrand is strictly positive and smooth for t in range).
double legendre_p_minus_half(double t) {
    const int N = 1 << 16;
    const double two_pi = 6.283185307179586476925286766559;
    double sum = 0.0;
    for (int i = 0; i < N; ++i) {
        double phi = two_pi * i / N;
        sum += 1.0 / std::sqrt(std::cosh(t) + std::sinh(t) * std::cos(phi));
    }
    return sum / N;
}

}  // namespace

TEST_CASE("grid weights sum to one") {
    for (int n : {256, 512}) {
        auto g12 = QuadratureGrid::build(GroupSpec(1, 2), n);
        double w = 0;
        for (double x : g12.weights) w += x;
        CHECK(w == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(g12.nodes.size() == static_cast<size_t>(n));
    }
    auto g22 = QuadratureGrid::build(GroupSpec(2, 2), 256);
    CHECK(g22.nodes.size() == 256u * 256u);
    double w = 0;
    for (double x : g22.weights) w += x;
    CHECK(w == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(QuadratureGrid::build(GroupSpec(1, 2), 128), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureGrid::build(GroupSpec(1, 3), 256), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureGrid::build(GroupSpec(3, 19), 256), std::invalid_argument);
}

TEST_CASE("Xi(a_0) = 1 essentially exactly") {
    for (auto spec : {GroupSpec(1, 2), GroupSpec(2, 2)}) {
        auto grid = QuadratureGrid::build(spec, 256);
        CHECK(std::abs(xi_value(spec, 0.0, grid) - 1.0) < 1e-12);
    }
}

TEST_CASE("Xi is symmetric in t and lies in (0, 1]") {
    for (auto spec : {GroupSpec(1, 2), GroupSpec(2, 2)}) {
        auto grid = QuadratureGrid::build(spec, spec.p == 1 ? 1024 : 384);
        double prev = 2.0;
        for (double t : {0.5, 1.0, 2.0, 4.0, 6.0}) {
            double v = xi_value(spec, t, grid);
            CHECK(v > 0.0);
            CHECK(v <= 1.0 + 1e-12);
            CHECK(v < prev);  // strictly decreasing along the sample grid
            prev = v;
            CHECK(xi_value(spec, -t, grid) == doctest::Approx(v).epsilon(1e-8));
        }
    }
}

TEST_CASE("grid refinement stability at the far end of the window") {
    for (auto spec : {GroupSpec(1, 2), GroupSpec(2, 2)}) {
        for (double t : {6.0, 12.0}) {
            double a = xi_value(spec, t, QuadratureGrid::build(spec, 512));
            double b = xi_value(spec, t, QuadratureGrid::build(spec, 1024));
            CHECK(std::abs(a - b) < 1e-6);
        }
    }
    CHECK_NOTHROW(xi_value_checked(GroupSpec(1, 2), 12.0, 512));
}

TEST_CASE("(1,2) quadrature matches the Legendre oracle") {
    GroupSpec spec(1, 2);
    auto grid = QuadratureGrid::build(spec, 2048);
    for (double t : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        double mine = xi_value(spec, t, grid);
        double oracle = legendre_p_minus_half(t);
        CHECK(mine == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("(2,2) quadrature matches the product oracle") {
    // so(2,2) splits as sl2 + sl2 and the boost pushes both factors at unit
    // rate, so Xi factors as P_{-1/2}(cosh t)^2
    GroupSpec spec(2, 2);
    auto grid = QuadratureGrid::build(spec, 512);
    for (double t : {0.5, 1.0, 2.0, 4.0}) {
        double mine = xi_value(spec, t, grid);
        double p = legendre_p_minus_half(t);
        CHECK(mine == doctest::Approx(p * p).epsilon(1e-5));
    }
}

TEST_CASE("synthetic decay data recovers the planted rate") {
    std::vector<double> ts, logs;
    for (int i = 0; i < 10; ++i) {
        double t = 5.0 + i;
        ts.push_back(t);
        logs.push_back(-0.5 * t + std::log(t));  // log Xi = -0.5 t + log t, exactly
    }
    FitResult f = fit_decay_model(ts, logs, 1);
    CHECK(f.slope == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    // the pure-exponential misfit absorbs the log into the rate
    FitResult g = fit_decay_model(ts, logs, 0);
    CHECK(g.slope < 0.5);
}

TEST_CASE("log degrees from the root data") {
    CHECK(xi_log_degree(GroupSpec(1, 2)) == 1);
    CHECK(xi_log_degree(GroupSpec(2, 2)) == 2);
    CHECK(xi_log_degree(GroupSpec(3, 19)) == 5);
}

TEST_CASE("decay fits land within 10% of rho(H)") {
    XiFitReport r12 = xi_decay_fit(GroupSpec(1, 2), 6.0, 12.0, 8, 1024);
    CHECK(r12.log_corrected.slope == doctest::Approx(0.5).epsilon(0.10));
    XiFitReport r22 = xi_decay_fit(GroupSpec(2, 2), 6.0, 12.0, 8, 512);
    CHECK(r22.log_corrected.slope == doctest::Approx(1.0).epsilon(0.10));
}

TEST_CASE("xi_decay_fit validates its window") {
    CHECK_THROWS_AS(xi_decay_fit(GroupSpec(1, 2), 2.0, 12.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(xi_decay_fit(GroupSpec(1, 2), 6.0, 5.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(xi_decay_fit(GroupSpec(1, 2), 6.0, 12.0, 4), std::invalid_argument);
}
