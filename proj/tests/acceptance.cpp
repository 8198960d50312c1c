// Acceptance gate: eight go/no-go criteria over the full surface, one
// PASS/FAIL line each, nonzero exit if anything fails. Tolerances are pinned
// here on purpose; loosening them is a decision, not a tweak.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fsdist/density.hpp"
#include "fsdist/inequalities.hpp"
#include "fsdist/specfun.hpp"
#include "fsdist/tail.hpp"
#include "fsdist/verify.hpp"

using namespace fsdist;

namespace {

int g_failures = 0;

void report(int id, const char* label, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %s  [%s]\n", pass ? "PASS" : "FAIL", id, label,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) g_failures++;
}

void run(int id, const char* label,
         const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [pass, detail] = body();
        report(id, label, pass, detail);
    } catch (const std::exception& e) {
        report(id, label, false, std::string("exception: ") + e.what());
    }
}

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double u01() { return (double)((gen() >> 11) + 1) * 0x1p-53; }
    double in(double lo, double hi) { return lo + (hi - lo) * u01(); }
};

}  // namespace

int main() {
    // 1. double series vs branch-cut quadrature, 1e-8 relative, under 5 s
    run(1, "series route matches branch cut to 1e-8", [] {
        constexpr double tol = 1e-8;
        auto start = std::chrono::steady_clock::now();
        double worst = 0.0;
        for (double t : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
            double s = density_series({t, 2.0}).value;
            double q = density_branch_cut({t, 2.0}).value;
            worst = std::max(worst, rel_diff(s, q));
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        bool pass = worst <= tol && secs < 5.0;
        return std::make_pair(pass, "worst rel " + fmt(worst) + ", " + fmt(secs) + " s");
    });

    // 2. contour inversion within 1e-3 absolute, and offset-invariant within
    //    its own error estimate
    run(2, "contour route within 1e-3 and offset-invariant", [] {
        constexpr double tol = 1e-3;
        double worst_abs = 0.0, worst_inv = 0.0;
        for (double t : {0.5, 1.0, 2.0, 5.0}) {
            const double height = 4000.0 / t;
            DensityArg near{t, 1.0 + 1.0 / t};
            EvalResult b = density_bromwich(near, height);
            double q = density_branch_cut({t, 2.0}).value;
            worst_abs = std::max(worst_abs, std::abs(b.value - q));

            EvalResult c2 = density_bromwich({t, 2.0}, height);
            EvalResult c3 = density_bromwich({t, 3.0}, height);
            double budget = c2.abs_err_estimate + c3.abs_err_estimate;
            worst_inv = std::max(worst_inv,
                                 std::abs(c2.value - c3.value) / budget);
        }
        bool pass = worst_abs <= tol && worst_inv <= 1.0;
        return std::make_pair(pass, "worst abs " + fmt(worst_abs) +
                                        ", offset shift / budget " + fmt(worst_inv));
    });

    // 3. the density integrates to 1 and stays positive
    run(3, "unit mass and positivity", [] {
        constexpr double tol = 1e-7;
        QuadResult n = oracles::normalization_integral();
        double err = std::abs(n.value - 1.0);
        bool positive = true;
        double t_bad = 0.0;
        for (int i = 0; i < 50; i++) {
            double t = 0.01 * std::pow(5000.0, i / 49.0);
            if (!(density_branch_cut({t, 2.0}).value > 0.0)) {
                positive = false;
                t_bad = t;
            }
        }
        bool pass = n.converged && err <= tol && positive;
        std::string detail = "mass error " + fmt(err);
        if (!positive) detail += ", nonpositive at t=" + fmt(t_bad);
        return std::make_pair(pass, detail);
    });

    // 4. tail closed form vs quadrature to 1e-9, elementary case to 1e-11
    run(4, "tail closed form matches quadrature and the elementary case", [] {
        constexpr double tol_quad = 1e-9;
        constexpr double tol_elem = 1e-11;
        QuadConfig tight{1e-13, 1e-12, 4000};
        double worst = 0.0;
        for (double rho : {0.6, 1.0, 1.5, 2.5, 4.0}) {
            for (double y : {0.3, 0.8, 2.0, 5.0, 10.0}) {
                double c = tail_closed_form({rho, y}).normalized;
                double q = tail_quadrature({rho, y}, tight).normalized;
                worst = std::max(worst, rel_diff(c, q));
            }
        }
        double worst_elem = 0.0;
        for (double y : {0.5, 1.0, 2.0}) {
            double c = tail_closed_form({1.5, y}).bare;
            worst_elem =
                std::max(worst_elem, rel_diff(c, oracles::tail_bare_elementary_rho32(y)));
        }
        bool pass = worst <= tol_quad && worst_elem <= tol_elem;
        return std::make_pair(pass, "worst rel " + fmt(worst) + ", elementary " +
                                        fmt(worst_elem));
    });

    // 5. tail asymptotic series: 1e-7 agreement, first-omitted-term honesty,
    //    and exact termination at half-integer order parameter
    run(5, "tail asymptotic series accuracy and termination", [] {
        constexpr double tol = 1e-7;
        QuadConfig tight{1e-13, 1e-12, 4000};
        double worst = 0.0, worst_claim = 0.0;
        for (double rho : {1.0, 2.0, 3.0}) {
            for (double y : {10.0, 20.0, 50.0}) {
                TailValue a = tail_asymptotic({rho, y});
                TailValue q = tail_quadrature({rho, y}, tight);
                worst = std::max(worst, rel_diff(a.normalized, q.normalized));
                double budget =
                    2.0 * a.abs_err_estimate + 10.0 * q.abs_err_estimate;
                worst_claim = std::max(
                    worst_claim, std::abs(a.normalized - q.normalized) / budget);
            }
        }
        bool exact = true;
        for (double y : {12.0, 30.0}) {
            if (tail_asymptotic({1.5, y}, 0).bare != tail_asymptotic({1.5, y}, 6).bare)
                exact = false;
        }
        bool pass = worst <= tol && worst_claim <= 1.0 && exact;
        return std::make_pair(pass, "worst rel " + fmt(worst) +
                                        ", error / claimed bound " + fmt(worst_claim) +
                                        (exact ? "" : ", termination broken"));
    });

    // 6. inequality sweeps: zero violations over 10000 boundary-biased points
    //    per inequality, and the log-convexity margin agrees in sign with the
    //    product-form margin at 1000 points
    run(6, "inequalities hold across the sweep", [] {
        long violations = 0;
        double tightest = 1e300;
        for (Inequality q : {Inequality::a1, Inequality::a2, Inequality::jones}) {
            for (const auto& r : sweep(q, -0.5, 10.0, 0.0, 100.0, 10000, 42)) {
                if (!r.holds) violations++;
                tightest = std::min(tightest, r.relative_margin);
            }
        }
        long sign_breaks = 0;
        Rng rng(9191);
        for (int i = 0; i < 1000; i++) {
            IneqPoint p{rng.in(-0.49, 6.0), rng.in(0.05, 30.0)};
            FProperties f = f_properties(p, 1e-4 * p.x);
            bool conv = f.log_convexity_margin > 0.0;
            bool a1 = margin_a1(p).holds;
            if (conv != a1) sign_breaks++;
        }
        bool pass = violations == 0 && sign_breaks == 0;
        return std::make_pair(pass, std::to_string(violations) + " violations, " +
                                        std::to_string(sign_breaks) +
                                        " sign breaks, tightest rel margin " +
                                        fmt(tightest));
    });

    // 7. derivative operator vs nested finite differences and the exact
    //    index-raising identity
    run(7, "derivative operator cross-checks", [] {
        constexpr double tol_fd = 1e-6;
        constexpr double tol_id = 1e-12;
        Rng rng(777);
        double worst_fd = 0.0;
        for (int i = 0; i < 20; i++) {
            int n = 1 + i % 3;
            double shift = rng.in(-4.0, 2.0);
            double order = rng.in(0.0, 8.0);
            double t = rng.in(0.3, 10.0);
            double h = t * std::pow(2.2e-16, 1.0 / (n + 4.0));
            double fd = oracles::operator_d_fd(n, shift, order, t, h);
            double an = bessel_operator_d(n, shift, order, t);
            worst_fd = std::max(worst_fd, rel_diff(an, fd));
        }
        double worst_id = 0.0;
        for (double mu : {0.5, 1.0, 2.0, 3.5}) {
            for (double t : {0.5, 2.0, 3.0, 7.0}) {
                double lhs = bessel_operator_d(1, -mu, mu, t);
                double rhs = std::pow(t, -mu - 1.0) * bessel_i(mu + 1.0, t).value;
                worst_id = std::max(worst_id, rel_diff(lhs, rhs));
            }
        }
        bool pass = worst_fd <= tol_fd && worst_id <= tol_id;
        return std::make_pair(pass, "worst fd rel " + fmt(worst_fd) +
                                        ", worst identity rel " + fmt(worst_id));
    });

    // 8. special-function identity battery
    run(8, "special function identities", [] {
        VerificationReport rep = run_suite("specfun");
        std::string detail = std::to_string(rep.passed()) + " checks";
        if (!rep.all_passed()) {
            detail = std::to_string(rep.failed()) + " of " +
                     std::to_string(rep.records.size()) + " checks failed, first: ";
            for (const auto& r : rep.records) {
                if (!r.pass) {
                    detail += r.id + " [" + r.inputs + "]";
                    break;
                }
            }
        }
        return std::make_pair(rep.all_passed(), detail);
    });

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
