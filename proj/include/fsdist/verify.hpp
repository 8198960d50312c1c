#pragma once

#include <string>
#include <vector>

#include "fsdist/common.hpp"
#include "fsdist/quadrature.hpp"
#include "fsdist/specfun.hpp"

namespace fsdist {

// One executed cross-check: two routes to the same quantity plus the
// discrepancy between them. pass == (discrepancy <= tolerance). One-sided
// checks (positivity, exact-zero, flags) encode the violation magnitude in
// discrepancy and use tolerance 0.
struct CheckRecord {
    std::string suite;
    std::string id;
    std::string inputs;  // "name=value" pairs joined with ';'
    std::string route_a;
    std::string route_b;
    double value_a = 0.0;
    double value_b = 0.0;
    double discrepancy = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> records;
    double wall_seconds = 0.0;  // informational; not serialized

    long passed() const;
    long failed() const;
    bool all_passed() const;
};

// suite is one of specfun | quadrature | density | tail | ineq | all.
// Throws std::invalid_argument for anything else. Runs are deterministic:
// repeated invocations produce identical records.
VerificationReport run_suite(const std::string& suite);

// Header plus one row per record, LF line endings, 17 significant digits.
// report_from_csv inverts report_to_csv losslessly (wall_seconds excepted).
std::string report_to_csv(const VerificationReport& report);
VerificationReport report_from_csv(const std::string& text);

// Reference implementations used only for cross-checking: each recomputes a
// library quantity by a deliberately different method.
namespace oracles {

// pFq summed from literal Pochhammer-quotient terms, each term built from
// scratch (no recursion between terms), in extended precision.
double pfq_naive(const PfqSpec& spec, int max_terms = 400);

// n-fold (1/t d/dt) applied to t^{power_shift} I_order(t) by nested 5-point
// centered differences with step h (O(h^4) truncation error per level,
// 5^n function evaluations).
double operator_d_fd(int n_applications, double power_shift, double order,
                     double t, double h);

// Bare integrated tail at rho = 3/2 via elementary functions:
// (1/sqrt(2 pi)) [1/y - e^{-2y}/y + 2 E1(2y)].
double tail_bare_elementary_rho32(double y);

// The branch-cut density without the x = sin(theta) substitution:
// (e/pi) int_{-1}^{1} e^{(x-1)t - x^2} [sqrt(1-x^2) cos phi(x) - x sin phi(x)] dx
// with phi(x) = x sqrt(1-x^2). Same integral, different parametrization and
// an integrand with square-root endpoint behavior.
double density_branch_cut_raw(double t, const QuadConfig& cfg = {});

// int_0^inf density(t) dt, split at t = 1 into a finite panel and a
// log-substituted window [1, 1e5], plus the t^{-5/2} power-law completion of
// the far tail calibrated from the last computed density value.
QuadResult normalization_integral();

}  // namespace oracles

}  // namespace fsdist
