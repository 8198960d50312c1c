#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fsdist/specfun.hpp"
#include "fsdist/tail.hpp"
#include "fsdist/verify.hpp"

using namespace fsdist;

namespace {
double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}
double prefactor(double rho) { return std::exp2(rho - 1.0) * fsdist::gamma(rho); }
}  // namespace

TEST_CASE("quadrature route reference values, normalized") {
    CHECK(rel_diff(tail_quadrature({0.6, 0.1}).normalized, 6.26254155345042584) < 1e-11);
    CHECK(rel_diff(tail_quadrature({1.0, 0.5}).normalized, 1.23020481822645484) < 1e-11);
    CHECK(rel_diff(tail_quadrature({2.0, 5.0}).normalized, 0.0453221687937393372) < 1e-11);
    CHECK(rel_diff(tail_quadrature({3.5, 2.0}).normalized, 0.0948962146061176943) < 1e-11);
    CHECK(rel_diff(tail_quadrature({1.0, 12.0}).normalized, 0.231153237674643151) < 1e-11);
}

TEST_CASE("quadrature route reference values, bare") {
    CHECK(rel_diff(tail_quadrature({2.0, 20.0}).bare, 0.0029397010125676) < 1e-9);
    CHECK(rel_diff(tail_quadrature({1.0, 10.0}).bare, 0.253403060994038) < 1e-9);
    CHECK(rel_diff(tail_quadrature({3.0, 50.0}).bare, 8.78689363301094e-6) < 1e-9);
    CHECK(rel_diff(tail_quadrature({1.0, 8.0}).bare, 0.283632895386506) < 1e-9);
}

TEST_CASE("closed form at rho = 3/2 equals the elementary expression") {
    for (double y : {0.5, 1.0, 2.0}) {
        TailValue v = tail_closed_form({1.5, y});
        CHECK(rel_diff(v.bare, oracles::tail_bare_elementary_rho32(y)) < 1e-11);
    }
}

TEST_CASE("closed form refuses the cancellation region") {
    CHECK_NOTHROW(tail_closed_form({1.5, 19.9}));
    CHECK_THROWS_AS(tail_closed_form({1.5, 20.5}), ConvergenceError);
    CHECK_THROWS_AS(tail_closed_form({2.0, 50.0}), ConvergenceError);
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(tail_quadrature({0.5, 1.0}), std::domain_error);
    CHECK_THROWS_AS(tail_quadrature({1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(tail_closed_form({0.4, 1.0}), std::domain_error);
    CHECK_THROWS_AS(tail_asymptotic({1.0, -1.0}), std::domain_error);
    CHECK_THROWS_AS(tail_asymptotic({1.0, 1.0}, -2), std::invalid_argument);
}

TEST_CASE("asymptotic route error claim holds against quadrature") {
    for (double rho : {1.0, 2.0, 3.0}) {
        for (double y : {10.0, 25.0, 60.0}) {
            TailValue a = tail_asymptotic({rho, y});
            TailValue q = tail_quadrature({rho, y});
            CHECK(std::abs(a.normalized - q.normalized) <=
                  2.0 * a.abs_err_estimate + 10.0 * q.abs_err_estimate);
        }
    }
}

TEST_CASE("asymptotic series terminates exactly at half-integer rho") {
    // At rho = 3/2 only the k = 0 term survives; extra budget changes nothing.
    TailValue one = tail_asymptotic({1.5, 15.0}, 0);
    TailValue many = tail_asymptotic({1.5, 15.0}, 5);
    CHECK(one.bare == many.bare);
    // At rho = 5/2 the series ends at k = 1.
    TailValue two = tail_asymptotic({2.5, 15.0}, 1);
    TailValue more = tail_asymptotic({2.5, 15.0}, 7);
    CHECK(two.bare == more.bare);
    // and the exact form at rho = 3/2, large y: bare ~ (1 - e^{-2y})/y on the
    // elementary expression with E1 exponentially negligible.
    double elem = oracles::tail_bare_elementary_rho32(15.0);
    CHECK(rel_diff(one.bare, elem) < 1e-9);
}

TEST_CASE("normalized and bare differ by the fixed prefactor") {
    for (double rho : {0.8, 1.5, 3.0}) {
        TailValue q = tail_quadrature({rho, 2.0});
        CHECK(rel_diff(q.normalized / q.bare, prefactor(rho)) < 1e-12);
        TailValue c = tail_closed_form({rho, 2.0});
        CHECK(rel_diff(c.normalized / c.bare, prefactor(rho)) < 1e-12);
        TailValue a = tail_asymptotic({rho, 40.0});
        CHECK(rel_diff(a.normalized / a.bare, prefactor(rho)) < 1e-12);
    }
}

TEST_CASE("auto dispatch switches route at the documented y") {
    CHECK(tail_auto({1.5, 5.0}).method == Method::closed_form);
    CHECK(tail_auto({1.5, 15.0}).method == Method::asymptotic);
    // the two routes agree at the switch point itself, so the dispatch has
    // no seam
    double lo = tail_closed_form({2.0, 10.0}).normalized;
    double hi = tail_asymptotic({2.0, 10.0}).normalized;
    CHECK(rel_diff(lo, hi) < 1e-8);
}

TEST_CASE("closed form decomposes through lambda_fn") {
    TailParams p{1.5, 2.0};
    TailValue c = tail_closed_form(p);
    double hyp = hyp_3f3(1.0, 1.0, p.rho + 0.5, 2.0, 2.0, 2.0 * p.rho, -2.0 * p.y).value;
    CHECK(rel_diff(c.normalized + lambda_fn(p), p.y * hyp) < 1e-12);
}
