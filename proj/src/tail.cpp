#include "fsdist/tail.hpp"

#include <cfloat>
#include <cmath>

#include "fsdist/specfun.hpp"

namespace fsdist {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kEulerGamma = 0.57721566490153286061;

void validate_tail(const TailParams& p) {
    if (!(p.rho > 0.5))
        throw std::domain_error("tail: require rho > 1/2");
    if (!(p.y > 0.0))
        throw std::domain_error("tail: require y > 0");
}

double norm_prefactor(double rho) {
    return std::exp((rho - 1.0) * kLn2 + ln_gamma(rho));
}

}  // namespace

TailValue tail_quadrature(const TailParams& p, const QuadConfig& cfg) {
    validate_tail(p);
    const double rho = p.rho;
    auto f = [rho](double x) {
        return bessel_i_scaled(rho - 1.0, x).value * std::pow(x, -rho);
    };
    QuadResult qr = integrate_semi_infinite_log(f, p.y, rho + 0.5, cfg);
    if (!qr.converged)
        throw ConvergenceError("tail_quadrature: quadrature did not converge");
    TailValue tv;
    double pref = norm_prefactor(rho);
    tv.bare = qr.value;
    tv.normalized = pref * qr.value;
    tv.method = Method::quadrature;
    tv.abs_err_estimate =
        pref * qr.abs_err_estimate + 4.0 * DBL_EPSILON * std::abs(tv.normalized);
    return tv;
}

TailValue tail_closed_form(const TailParams& p, const Truncation& tr) {
    validate_tail(p);
    detail::validate_truncation(tr);
    if (p.y > tail_y_cancel)
        throw ConvergenceError(
            "tail_closed_form: cancellation exceeds double precision for y > 20; "
            "use tail_asymptotic");
    const double rho = p.rho;
    const double y = p.y;
    EvalResult f33 = hyp_3f3(1.0, 1.0, rho + 0.5, 2.0, 2.0, 2.0 * rho, -2.0 * y, tr);
    double psi_a = digamma(2.0 * rho - 1.0);
    double psi_b = digamma(rho - 0.5);
    TailValue tv;
    tv.normalized = -kEulerGamma + y * f33.value - std::log(2.0 * y) + psi_a - psi_b;
    double pref = norm_prefactor(rho);
    tv.bare = tv.normalized / pref;
    tv.method = Method::closed_form;
    double pieces = kEulerGamma + std::abs(y * f33.value) +
                    std::abs(std::log(2.0 * y)) + std::abs(psi_a) + std::abs(psi_b);
    tv.abs_err_estimate = y * f33.abs_err_estimate + 4.0 * DBL_EPSILON * pieces;
    return tv;
}

double lambda_fn(const TailParams& p) {
    validate_tail(p);
    return kEulerGamma + std::log(2.0 * p.y) + digamma(p.rho - 0.5) -
           digamma(2.0 * p.rho - 1.0);
}

TailValue tail_asymptotic(const TailParams& p, int k_cap) {
    validate_tail(p);
    if (k_cap < tail_k_auto)
        throw std::invalid_argument("tail_asymptotic: k_cap must be >= 0 or tail_k_auto");
    const double rho = p.rho;
    const double y = p.y;
    const double l2y = std::log(2.0 * y);

    // Coefficients in log domain with explicit sign: the reciprocal
    // Gamma(rho-k-1/2) switches sign with k and vanishes at its poles,
    // terminating the series for half-integer rho.
    auto term_at = [&](int k, double& log_mag) -> double {
        double x = rho - k - 0.5;
        double rg_log, rg_sign;
        if (x > 0.0) {
            rg_log = -ln_gamma(x);
            rg_sign = 1.0;
        } else {
            double s = detail::sin_pi(x);
            if (s == 0.0) return 0.0;  // pole of Gamma: coefficient exactly zero
            rg_log = std::log(std::abs(s)) + ln_gamma(1.0 - x) - std::log(kPi);
            rg_sign = (s > 0.0) ? 1.0 : -1.0;
        }
        log_mag = ln_gamma(rho + k - 0.5) - std::log(rho + k - 0.5) + rg_log -
                  ln_gamma(k + 1.0) - k * l2y;
        double sign = ((k & 1) ? -1.0 : 1.0) * rg_sign;
        return sign;
    };

    double sum = 0.0;
    double prev_mag = 0.0;
    double first_omitted = 0.0;
    bool terminated = false;
    const int hard_cap = (k_cap == tail_k_auto) ? 400 : k_cap;
    int k = 0;
    for (k = 0; k <= hard_cap; k++) {
        double log_mag = 0.0;
        double sign = term_at(k, log_mag);
        if (sign == 0.0) {
            terminated = true;
            break;
        }
        double mag = std::exp(log_mag);
        if (k_cap == tail_k_auto && k > 0 && mag >= prev_mag) {
            first_omitted = mag;  // optimal truncation: stop before the growth
            break;
        }
        sum += sign * mag;
        prev_mag = mag;
        if (mag <= DBL_EPSILON * std::abs(sum) * 0.01) {
            first_omitted = mag;
            terminated = true;  // converged below roundoff: effectively exact
            break;
        }
    }
    if (k_cap == tail_k_auto && !terminated && first_omitted == 0.0 && k > hard_cap)
        first_omitted = prev_mag;
    if (k_cap != tail_k_auto && !terminated && k > hard_cap) {
        double log_mag = 0.0;
        double sign = term_at(hard_cap + 1, log_mag);
        first_omitted = (sign == 0.0) ? 0.0 : std::exp(log_mag);
        if (sign == 0.0) terminated = true;
    }

    TailValue tv;
    double series_pref = std::exp((0.5 - rho) * std::log(y)) / std::sqrt(2.0 * kPi);
    tv.bare = series_pref * sum;
    double pref = norm_prefactor(rho);
    tv.normalized = pref * tv.bare;
    tv.method = Method::asymptotic;
    double bare_err = terminated
                          ? std::abs(tv.bare) * (4.0 * DBL_EPSILON + std::exp(-2.0 * y))
                          : series_pref * first_omitted + 4.0 * DBL_EPSILON * std::abs(tv.bare);
    tv.abs_err_estimate = pref * bare_err;
    return tv;
}

TailValue tail_auto(const TailParams& p) {
    validate_tail(p);
    if (p.y <= tail_y_switch) return tail_closed_form(p);
    return tail_asymptotic(p);
}

}  // namespace fsdist
