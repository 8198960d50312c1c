#include "fsdist/density.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>

#include "fsdist/specfun.hpp"

namespace fsdist {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kSqrtPi = 1.77245385090551602730;

}  // namespace

double phi(double x) {
    if (!(std::abs(x) <= 1.0))
        throw std::domain_error("phi: require |x| <= 1");
    return x * std::sqrt((1.0 - x) * (1.0 + x));
}

EvalResult density_branch_cut(const DensityArg& arg, const QuadConfig& cfg) {
    const double t = arg.t;
    if (!(t >= 0.0))
        throw std::domain_error("density_branch_cut: require t >= 0");
    // e^{-t} is folded into the exponent so large t cannot overflow.
    auto f = [t](double th) {
        double s = std::sin(th);
        return std::exp(t * (s - 1.0) - s * s) *
               std::cos(th + 0.5 * std::sin(2.0 * th)) * std::cos(th);
    };
    QuadResult qr = integrate_finite(f, -0.5 * kPi, 0.5 * kPi, cfg);
    if (!qr.converged)
        throw ConvergenceError("density_branch_cut: quadrature did not converge");
    EvalResult res;
    res.value = qr.value * (kE / kPi);
    res.abs_err_estimate = qr.abs_err_estimate * (kE / kPi) +
                           4.0 * DBL_EPSILON * std::abs(res.value);
    res.effort = qr.nodes_used;
    res.method = Method::branch_cut;
    return res;
}

double bessel_operator_d(int n_applications, double power_shift, double order,
                         double t, const Truncation& tr) {
    detail::validate_truncation(tr);
    if (n_applications < 0)
        throw std::invalid_argument("bessel_operator_d: n_applications must be >= 0");
    if (!(t > 0.0))
        throw std::domain_error("bessel_operator_d: require t > 0");
    if (!(order >= 0.0))
        throw std::domain_error("bessel_operator_d: require order >= 0");

    const double lt = std::log(t);
    const int n = n_applications;
    double sum = 0.0;       // scaled by exp(-log_scale)
    double log_scale = 0.0; // log of the unit in which `sum` is held
    bool have_scale = false;
    int small = 0;
    bool converged = false;
    for (int k = 0; k <= tr.max_terms; k++) {
        double m = 2.0 * k + order + power_shift;
        double sign = 1.0, coef_log = 0.0;
        bool zero = false;
        for (int j = 0; j < n; j++) {
            double factor = m - 2.0 * j;
            if (factor == 0.0) {
                zero = true;
                break;
            }
            if (factor < 0.0) sign = -sign;
            coef_log += std::log(std::abs(factor));
        }
        if (zero) continue;  // exactly-zero term; skip without touching the counter
        double term_log = coef_log + (m - 2.0 * n) * lt - (2.0 * k + order) * kLn2 -
                          ln_gamma(k + 1.0) - ln_gamma(k + order + 1.0);
        if (!have_scale) {
            log_scale = term_log;
            have_scale = true;
        } else if (term_log > log_scale + 200.0) {
            sum *= std::exp(log_scale - term_log);
            log_scale = term_log;
        }
        double term = sign * std::exp(term_log - log_scale);
        sum += term;
        if (std::abs(term) <= tr.rel_tol * std::abs(sum)) {
            if (++small >= tr.consecutive_small) {
                converged = true;
                break;
            }
        } else {
            small = 0;
        }
    }
    if (!converged)
        throw ConvergenceError("bessel_operator_d: term cap hit before the stopping rule");
    if (!have_scale) return 0.0;
    double value = sum * std::exp(log_scale);
    if (!std::isfinite(value))
        throw std::overflow_error("bessel_operator_d: result exceeds double range");
    return value;
}

SeriesDiagnostics density_series(const DensityArg& arg, const SeriesBudget& budget) {
    const double t = arg.t;
    if (!(t > 0.0))
        throw std::domain_error("density_series: require t > 0");
    if (budget.n_max < 0 || budget.r_max < 0 || budget.k_max < 0)
        throw std::invalid_argument("density_series: budget caps must be >= 0");
    detail::validate_truncation(budget.trunc);

    Truncation op_tr = budget.trunc;
    op_tr.max_terms = std::max(1, budget.k_max);

    const double rel_tol = budget.trunc.rel_tol;
    const int need_small = budget.trunc.consecutive_small;

    SeriesDiagnostics diag;
    double s_one = 0.0, s_two = 0.0;
    double outer_coef = 1.0;  // (-2)^n / (2n)!
    int outer_small = 0;
    bool outer_done = false;
    for (int n = 0; n <= budget.n_max; n++) {
        if (n > 0) outer_coef *= -2.0 / ((2.0 * n - 1.0) * (2.0 * n));
        double inner_one = 0.0, inner_two = 0.0;
        int inner_small = 0;
        bool inner_done = false;
        int r = 0;
        for (r = 0; r <= budget.r_max; r++) {
            // b_r(n) = 2^r Gamma(n+r+3/2) / r!, assembled in the log domain.
            double lbr = r * kLn2 + ln_gamma(n + r + 1.5) - ln_gamma(r + 1.0);
            double d_one = bessel_operator_d(n, -r - 2.0, 2.0 * n + r + 1.0, t, op_tr);
            double d_two = bessel_operator_d(n + 1, -r - 1.0, 2.0 * n + r + 2.0, t, op_tr);
            double term_one, term_two;
            if (lbr < 700.0) {
                double br = std::exp(lbr);
                term_one = br * d_one;
                term_two = br * d_two;
            } else {
                term_one = d_one > 0.0 ? std::exp(lbr + std::log(d_one)) : 0.0;
                term_two = d_two > 0.0 ? std::exp(lbr + std::log(d_two)) : 0.0;
            }
            inner_one += term_one;
            inner_two += term_two;
            if (std::abs(term_one) <= rel_tol * std::abs(inner_one) &&
                std::abs(term_two) <= rel_tol * std::abs(inner_two)) {
                if (++inner_small >= need_small) {
                    inner_done = true;
                    break;
                }
            } else {
                inner_small = 0;
            }
        }
        if (!inner_done)
            throw ConvergenceError("density_series: r_max hit before the stopping rule");
        if (r + 1 > diag.r_terms_used) diag.r_terms_used = r + 1;

        double contrib_one = outer_coef * inner_one;
        double contrib_two = outer_coef / (2.0 * n + 1.0) * inner_two;
        s_one += contrib_one;
        s_two += contrib_two;
        diag.n_terms_used = n + 1;
        double scale = std::abs(s_one) + std::abs(s_two);
        if (std::max(std::abs(contrib_one), std::abs(contrib_two)) <= rel_tol * scale) {
            if (++outer_small >= need_small) {
                outer_done = true;
                break;
            }
        } else {
            outer_small = 0;
        }
    }
    if (!outer_done)
        throw ConvergenceError("density_series: n_max hit before the stopping rule");

    diag.piece_one = s_one;
    diag.piece_two = s_two;
    diag.value = 2.0 * t * std::exp(-t) / kSqrtPi * (s_one - s_two);
    return diag;
}

double default_bromwich_height(double t) {
    if (!(t > 0.0))
        throw std::domain_error("default_bromwich_height: require t > 0");
    return 400.0 / t;
}

EvalResult density_bromwich(const DensityArg& arg, double truncation_height,
                            const QuadConfig& cfg) {
    const double t = arg.t;
    const double c = arg.bromwich_offset;
    const double U = truncation_height;
    if (!(t > 0.0))
        throw std::domain_error("density_bromwich: require t > 0");
    if (!(c > 1.0))
        throw std::domain_error("density_bromwich: bromwich offset must exceed 1");
    if (!(U > 0.0))
        throw std::invalid_argument("density_bromwich: truncation height must be > 0");

    auto g = [t, c](double u) {
        std::complex<double> w(c, u);
        std::complex<double> s = std::sqrt(w - 1.0) * std::sqrt(w + 1.0);
        return (std::exp(w * t + w * s - w * w + 1.0) / (w + s)).real();
    };
    // Real part symmetrizes the two half-lines; the contour beyond +-U is
    // bounded through integration by parts of the ~e^{iut}/(2u) tail.
    QuadResult qr = integrate_finite(g, 0.0, U, cfg);
    EvalResult res;
    double pref = std::exp(-t) / kPi;
    res.value = pref * qr.value;
    double trunc_bound = std::exp((c - 1.0) * t + 0.5) / (kPi * U * t);
    res.abs_err_estimate = pref * qr.abs_err_estimate + trunc_bound;
    res.effort = qr.nodes_used;
    res.method = Method::bromwich;
    return res;
}

}  // namespace fsdist
