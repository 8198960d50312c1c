#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fsdist/inequalities.hpp"
#include "fsdist/specfun.hpp"

using namespace fsdist;

namespace {
double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}
}  // namespace

TEST_CASE("margins at (nu=0, x=1) match reference values") {
    // References are in plain Bessel units; the margins are computed in
    // exponentially scaled units, so a1 (quadratic) carries e^-2x and the
    // linear ones carry e^-x.
    IneqPoint p{0.0, 1.0};
    CHECK(rel_diff(margin_a1(p).margin * std::exp(2.0), 0.567989336917) < 1e-11);
    CHECK(rel_diff(margin_a2(p).margin * std::exp(1.0), 0.418327221763) < 1e-11);
    CHECK(rel_diff(margin_jones(p).margin * std::exp(1.0), 0.70090677376) < 1e-11);
    CHECK(margin_a1(p).holds);
    CHECK(margin_a2(p).holds);
    CHECK(margin_jones(p).holds);
}

TEST_CASE("relative margin divides by the left side") {
    MarginReport r = margin_a2({1.5, 3.0});
    double i0 = bessel_i_scaled(1.5, 3.0).value;
    CHECK(rel_diff(r.relative_margin, r.margin / i0) < 1e-14);
}

TEST_CASE("scaled margins keep the sign of the unscaled inequality") {
    for (double nu : {-0.3, 0.0, 2.0, 6.5}) {
        for (double x : {0.2, 1.0, 9.0, 30.0}) {
            IneqPoint p{nu, x};
            double i0 = bessel_i(nu, x).value;
            double i1 = bessel_i(nu + 1.0, x).value;
            double i2 = bessel_i(nu + 2.0, x).value;
            bool a1_u = i0 * i1 / x - (i1 * i1 - i0 * i2) > 0.0;
            bool a2_u = i0 - (1.0 + (2.0 * nu + 1.0) / (2.0 * x)) * i1 > 0.0;
            bool jones_u = i0 - i1 > 0.0;
            CHECK(margin_a1(p).holds == a1_u);
            CHECK(margin_a2(p).holds == a2_u);
            CHECK(margin_jones(p).holds == jones_u);
        }
    }
}

TEST_CASE("margins survive x = 700 without overflow") {
    for (Inequality q : {Inequality::a1, Inequality::a2, Inequality::jones}) {
        MarginReport r = margin(q, {0.0, 700.0});
        CHECK(std::isfinite(r.margin));
        CHECK(r.holds);
    }
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(margin_a1({-0.5, 1.0}), std::domain_error);
    CHECK_THROWS_AS(margin_a2({-0.7, 1.0}), std::domain_error);
    CHECK_THROWS_AS(margin_jones({0.0, 0.0}), std::domain_error);
}

TEST_CASE("sweep is deterministic and boundary-biased") {
    auto a = sweep(Inequality::a1, -0.5, 10.0, 0.0, 100.0, 400, 42);
    auto b = sweep(Inequality::a1, -0.5, 10.0, 0.0, 100.0, 400, 42);
    REQUIRE(a.size() == 400);
    for (size_t i = 0; i < a.size(); i++) {
        CHECK(a[i].point.nu == b[i].point.nu);
        CHECK(a[i].point.x == b[i].point.x);
        CHECK(a[i].margin == b[i].margin);
    }
    long near_nu_edge = 0, near_x_edge = 0;
    for (const auto& r : a) {
        CHECK(r.point.nu > -0.5);  // open limits never sampled exactly
        CHECK(r.point.x > 0.0);
        if (r.point.nu < -0.5 + 1e-3) near_nu_edge++;
        if (r.point.x < 1e-3) near_x_edge++;
    }
    CHECK(near_nu_edge >= 100);  // a quarter of samples sit at each edge
    CHECK(near_x_edge >= 100);
    for (const auto& r : a) CHECK(r.holds);
}

TEST_CASE("sweep validation") {
    CHECK_THROWS_AS(sweep(Inequality::a1, -0.6, 1.0, 0.0, 1.0, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sweep(Inequality::a1, 0.0, 1.0, -1.0, 1.0, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sweep(Inequality::a1, 1.0, 1.0, 0.0, 1.0, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sweep(Inequality::a1, 0.0, 1.0, 0.0, 1.0, 0, 1),
                    std::invalid_argument);
}

TEST_CASE("f properties") {
    FProperties r = f_properties({1.0, 2.0}, 1e-5);
    CHECK(r.f > 0.0);
    CHECK(r.f_decreasing_margin > 0.0);
    CHECK(r.log_convexity_margin > 0.0);
    CHECK(r.fd_mismatch < 1e-7);

    // log-convexity margin is x^-2nu times the a1 margin
    for (double nu : {0.0, 1.5, 3.0}) {
        for (double x : {0.5, 4.0, 12.0}) {
            FProperties f = f_properties({nu, x}, 1e-4 * x);
            double expect = std::pow(x, -2.0 * nu) * margin_a1({nu, x}).margin;
            CHECK(rel_diff(f.log_convexity_margin, expect) < 1e-11);
        }
    }
}

TEST_CASE("f step validation") {
    CHECK_THROWS_AS(f_properties({1.0, 2.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(f_properties({1.0, 2.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(f_properties({1.0, 2.0}, -0.1), std::invalid_argument);
}
