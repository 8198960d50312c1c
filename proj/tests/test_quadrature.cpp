#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fsdist/quadrature.hpp"

using namespace fsdist;

TEST_CASE("finite quadrature on closed forms") {
    auto sq = [](double x) { return x * x; };
    QuadResult r = integrate_finite(sq, 0.0, 3.0);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 9.0) < 1e-12);
    CHECK(std::abs(r.value - 9.0) <= 10.0 * r.abs_err_estimate + 1e-14);

    auto osc = [](double x) { return std::sin(10.0 * x); };
    r = integrate_finite(osc, 0.0, 3.0);
    double exact = (1.0 - std::cos(30.0)) / 10.0;
    CHECK(r.converged);
    CHECK(std::abs(r.value - exact) < 1e-12);
}

TEST_CASE("finite quadrature is additive over splits") {
    auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
    QuadResult whole = integrate_finite(f, 0.0, 4.0);
    QuadResult left = integrate_finite(f, 0.0, 1.3);
    QuadResult right = integrate_finite(f, 1.3, 4.0);
    CHECK(std::abs(whole.value - (left.value + right.value)) < 1e-12);
}

TEST_CASE("quadrature error estimate is honest under a tight budget") {
    // A needle the 7/15 rule cannot resolve with few panels: converged must
    // come back false and the estimate must still cover the true error.
    auto needle = [](double x) { return std::exp(-1e6 * x * x); };
    QuadConfig cfg;
    cfg.max_subdivisions = 4;
    QuadResult r = integrate_finite(needle, -1.0, 1.0, cfg);
    CHECK_FALSE(r.converged);
    double exact = std::sqrt(3.14159265358979324 / 1e6);
    CHECK(std::abs(r.value - exact) <= 10.0 * r.abs_err_estimate);
}

TEST_CASE("non-finite integrand raises") {
    auto bad = [](double x) { return 1.0 / (x - 0.5); };
    CHECK_THROWS_AS(integrate_finite(bad, 0.0, 1.0), ConvergenceError);
}

TEST_CASE("config validation") {
    QuadConfig cfg;
    cfg.abs_tol = -1.0;
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(integrate_finite(one, 0.0, 1.0, cfg), std::invalid_argument);
    cfg = QuadConfig{};
    cfg.max_subdivisions = 0;
    CHECK_THROWS_AS(integrate_finite(one, 0.0, 1.0, cfg), std::invalid_argument);
}

TEST_CASE("semi-infinite log map with algebraic decay") {
    auto cubic = [](double x) { return 1.0 / (x * x * x); };
    QuadResult r = integrate_semi_infinite_log(cubic, 1.0, 3.0);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 0.5) < 1e-10);

    auto three_halves = [](double x) { return std::pow(x, -1.5); };
    r = integrate_semi_infinite_log(three_halves, 2.0, 1.5);
    CHECK(std::abs(r.value - 2.0 / std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("semi-infinite log map with exponential decay") {
    auto ex = [](double x) { return std::exp(-x); };
    QuadResult r = integrate_semi_infinite_log(ex, 0.5, 50.0);
    CHECK(r.converged);
    CHECK(std::abs(r.value - std::exp(-0.5)) < 1e-12);
}
