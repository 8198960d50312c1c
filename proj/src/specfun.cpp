#include "fsdist/specfun.hpp"

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace fsdist {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double ln_gamma(double x) {
    // Lanczos sum, g = 607/128 shifted form; relative error < 1e-14 for x > 0.
    static const double cof[14] = {
        57.1562356658629235,     -59.5979603554754912,
        14.1360979747417471,     -0.491913816097620199,
        0.339946499848118887e-4,  0.465236289270485756e-4,
        -0.983744753048795646e-4, 0.158088703224912494e-3,
        -0.210264441724104883e-3, 0.217439618115212643e-3,
        -0.164318106536763890e-3, 0.844182239838527433e-4,
        -0.261908384015814087e-4, 0.368991826595316234e-5};
    if (!(x > 0.0))
        throw std::domain_error("ln_gamma: argument must be > 0");
    double y = x;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (int j = 0; j < 14; j++) ser += cof[j] / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

namespace detail {

double sin_pi(double x) {
    // Every double with |x| >= 2^53 is an integer, so sin(pi x) = 0 exactly.
    if (std::abs(x) >= 9007199254740992.0) return 0.0;
    double n = std::floor(x);
    double f = x - n;
    if (f == 0.0) return 0.0;
    double v = (f <= 0.5) ? std::sin(kPi * f) : std::sin(kPi * (1.0 - f));
    bool odd = std::fmod(n, 2.0) != 0.0;
    return odd ? -v : v;
}

double ln_abs_gamma(double x, int& sign) {
    if (x > 0.0) {
        sign = 1;
        return ln_gamma(x);
    }
    if (is_nonpositive_integer(x))
        throw std::invalid_argument("ln_abs_gamma: pole at non-positive integer");
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x), and Gamma(1-x) > 0 here.
    double s = sin_pi(x);
    sign = (s > 0.0) ? 1 : -1;
    return std::log(kPi) - std::log(std::abs(s)) - ln_gamma(1.0 - x);
}

}  // namespace detail

double gamma(double x) {
    if (x > 0.0) return std::exp(ln_gamma(x));
    if (is_nonpositive_integer(x))
        throw std::invalid_argument("gamma: pole at non-positive integer");
    int sign = 0;
    double lg = detail::ln_abs_gamma(x, sign);
    return sign * std::exp(lg);
}

double reciprocal_gamma(double x) {
    if (x > 0.0) return std::exp(-ln_gamma(x));
    double s = detail::sin_pi(x);
    if (s == 0.0) return 0.0;
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi; keep it in logs, the magnitude
    // is legitimately huge for very negative x.
    double lg = std::log(std::abs(s)) + ln_gamma(1.0 - x) - std::log(kPi);
    double sign = (s > 0.0) ? 1.0 : -1.0;
    return sign * std::exp(lg);
}

double digamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("digamma: argument must be > 0");
    // Shift into the asymptotic region, then the Stirling-type tail through
    // w^{-14}; at w >= 12 the first dropped term is below 1e-18.
    double s = 0.0;
    double w = x;
    while (w < 12.0) {
        s -= 1.0 / w;
        w += 1.0;
    }
    double iw2 = 1.0 / (w * w);
    double tail = iw2 * (1.0 / 12.0 +
                  iw2 * (-1.0 / 120.0 +
                  iw2 * (1.0 / 252.0 +
                  iw2 * (-1.0 / 240.0 +
                  iw2 * (1.0 / 132.0 +
                  iw2 * (-691.0 / 32760.0 +
                  iw2 * (1.0 / 12.0)))))));
    return s + std::log(w) - 0.5 / w - tail;
}

double pochhammer(double a, int k) {
    if (k < 0)
        throw std::invalid_argument("pochhammer: k must be >= 0");
    long double acc = 1.0L;
    for (int i = 0; i < k; i++) acc *= (long double)a + i;
    if (std::abs((double)acc) > DBL_MAX || !std::isfinite((double)acc))
        throw std::overflow_error("pochhammer: result exceeds double range");
    return (double)acc;
}

namespace detail {

bool bessel_use_asymptotic(double nu, double x) {
    // The large-argument expansion reaches 2e-15 relative error once
    // x >= nu^2/2 (measured); 0.6 nu^2 keeps margin. Below that the terms
    // grow before they shrink and the series route must be used.
    return x >= bessel_x_switch && x >= 0.6 * nu * nu;
}

EvalResult bessel_i_scaled_series(double nu, double x, const Truncation& tr) {
    EvalResult res;
    res.method = Method::power_series;
    if (x == 0.0) {
        if (nu == 0.0) res.value = 1.0;
        else if (nu > 0.0) res.value = 0.0;
        else res.value = std::numeric_limits<double>::infinity();
        res.effort = 1;
        return res;
    }
    // e^{-x} (x/2)^nu / Gamma(nu+1) * sum_k (x^2/4)^k / (k! (nu+1)_k).
    // The inner sum has positive terms that can reach e^x, so it is
    // renormalized by 2^-512 as needed and reassembled in the exponent.
    const double z2 = 0.25 * x * x;
    double term = 1.0, sum = 1.0, log_scale = 0.0;
    int small = 0, k = 0;
    for (k = 1; k <= tr.max_terms; k++) {
        term *= z2 / (k * (nu + k));
        sum += term;
        if (term > 1e250) {
            term *= 0x1p-512;
            sum *= 0x1p-512;
            log_scale += 512.0 * kLn2;
        }
        if (term <= tr.rel_tol * sum) {
            if (++small >= tr.consecutive_small) break;
        } else {
            small = 0;
        }
    }
    if (small < tr.consecutive_small)
        throw ConvergenceError("bessel_i: series did not meet the stopping rule");
    double log_pref = -x + nu * std::log(0.5 * x) - ln_gamma(nu + 1.0);
    res.value = std::exp(log_pref + log_scale + std::log(sum));
    res.abs_err_estimate = res.value * (term / sum + 4.0 * DBL_EPSILON);
    res.effort = k;
    return res;
}

EvalResult bessel_i_scaled_asymptotic(double nu, double x, const Truncation& tr) {
    // e^{-x} I_nu(x) ~ (2 pi x)^{-1/2} sum_k (-1)^k prod_j (4nu^2-(2j-1)^2) / (k! (8x)^k)
    EvalResult res;
    res.method = Method::asymptotic;
    const double mu = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0, first_omitted = 0.0;
    int small = 0, k = 0;
    bool stopped = false;
    for (k = 1; k <= tr.max_terms; k++) {
        double next = term * -(mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        if (std::abs(next) >= std::abs(term) && std::abs(term) > 0.0) {
            first_omitted = std::abs(next);  // divergence onset: optimal truncation
            stopped = true;
            break;
        }
        term = next;
        sum += term;
        if (std::abs(term) <= tr.rel_tol * std::abs(sum)) {
            if (++small >= tr.consecutive_small) {
                first_omitted = std::abs(term);
                stopped = true;
                break;
            }
        } else {
            small = 0;
        }
    }
    if (!stopped)
        throw ConvergenceError("bessel_i: asymptotic series did not meet the stopping rule");
    double pref = 1.0 / std::sqrt(2.0 * kPi * x);
    res.value = pref * sum;
    res.abs_err_estimate = pref * first_omitted + 4.0 * DBL_EPSILON * std::abs(res.value);
    res.effort = k;
    return res;
}

}  // namespace detail

namespace {

void validate_bessel_args(double nu, double x, const Truncation& tr) {
    detail::validate_truncation(tr);
    if (!(nu >= -0.5) || std::isnan(nu))
        throw std::domain_error("bessel_i: order must be >= -1/2");
    if (!(x >= 0.0) || std::isnan(x))
        throw std::domain_error("bessel_i: argument must be >= 0");
}

}  // namespace

EvalResult bessel_i_scaled(double nu, double x, const Truncation& tr) {
    validate_bessel_args(nu, x, tr);
    if (detail::bessel_use_asymptotic(nu, x))
        return detail::bessel_i_scaled_asymptotic(nu, x, tr);
    return detail::bessel_i_scaled_series(nu, x, tr);
}

EvalResult bessel_i(double nu, double x, const Truncation& tr) {
    validate_bessel_args(nu, x, tr);
    if (x > 700.0)
        throw std::overflow_error("bessel_i: overflow for x > 700, use bessel_i_scaled");
    EvalResult res = bessel_i_scaled(nu, x, tr);
    double ex = std::exp(x);
    res.value *= ex;
    res.abs_err_estimate *= ex;
    return res;
}

EvalResult hyp_pfq(const PfqSpec& spec, const Truncation& tr) {
    detail::validate_truncation(tr);
    const auto& a = spec.numerator_params;
    const auto& b = spec.denominator_params;
    for (double bj : b) {
        if (is_nonpositive_integer(bj))
            throw std::invalid_argument("hyp_pfq: denominator parameter is a non-positive integer");
    }
    bool terminating = false;
    for (double ai : a)
        if (is_nonpositive_integer(ai)) terminating = true;
    const size_t p = a.size(), q = b.size();
    if (!terminating && spec.z != 0.0) {
        if (p > q + 1)
            throw std::domain_error("hyp_pfq: series diverges for p > q+1 and z != 0");
        if (p == q + 1 && std::abs(spec.z) >= 1.0)
            throw std::domain_error("hyp_pfq: series requires |z| < 1 for p = q+1");
    }

    EvalResult res;
    res.method = Method::power_series;
    // Extended-precision accumulation: the alternating 3F3(-2y) used by the
    // tail loses ~0.87|z| bits to cancellation; 64-bit significands keep the
    // y <= 20 window inside a 1e-11 error budget where doubles would not.
    long double term = 1.0L, sum = 1.0L, sum_abs = 1.0L;
    int small = 0;
    long l = 0;
    bool converged = false;
    for (l = 0; l < tr.max_terms; l++) {
        long double num = 1.0L, den = 1.0L;
        for (double ai : a) num *= (long double)ai + l;
        for (double bj : b) den *= (long double)bj + l;
        if (num == 0.0L) {  // a numerator parameter hit a non-positive integer: polynomial case
            converged = true;
            term = 0.0L;
            break;
        }
        term *= num / den * (long double)spec.z / (l + 1);
        sum += term;
        sum_abs += std::abs(term);
        if (std::abs(term) <= (long double)tr.rel_tol * std::abs(sum)) {
            if (++small >= tr.consecutive_small) {
                converged = true;
                break;
            }
        } else {
            small = 0;
        }
    }
    if (!converged)
        throw ConvergenceError("hyp_pfq: stopping rule not met within max_terms");
    res.value = (double)sum;
    res.abs_err_estimate =
        (double)(std::abs(term) + (long double)LDBL_EPSILON * sum_abs) +
        DBL_EPSILON * std::abs(res.value);
    res.effort = l + 1;
    return res;
}

EvalResult hyp_1f1(double a, double b, double z, const Truncation& tr) {
    return hyp_pfq({{a}, {b}, z}, tr);
}

EvalResult hyp_2f1(double a, double b, double c, double z, const Truncation& tr) {
    return hyp_pfq({{a, b}, {c}, z}, tr);
}

EvalResult hyp_3f2(double a1, double a2, double a3, double b1, double b2,
                   double z, const Truncation& tr) {
    return hyp_pfq({{a1, a2, a3}, {b1, b2}, z}, tr);
}

EvalResult hyp_3f3(double a1, double a2, double a3, double b1, double b2, double b3,
                   double z, const Truncation& tr) {
    return hyp_pfq({{a1, a2, a3}, {b1, b2, b3}, z}, tr);
}

double exp_integral_e1(double y) {
    if (!(y > 0.0))
        throw std::domain_error("exp_integral_e1: argument must be > 0");
    constexpr double euler_gamma = 0.57721566490153286061;
    if (y <= 1.0) {
        // E1(y) = -gamma - ln y + sum_{n>=1} (-1)^{n+1} y^n / (n n!)
        double sum = 0.0, pow_term = 1.0;
        for (int n = 1; n <= 60; n++) {
            pow_term *= y / n;
            double term = ((n & 1) ? pow_term : -pow_term) / n;
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return -euler_gamma - std::log(y) + sum;
    }
    // Continued fraction E1(y) = e^{-y} / (y+1- 1/(y+3- 4/(y+5- 9/(...)))),
    // evaluated by the modified Lentz algorithm.
    const double tiny = 1e-300;
    double b = y + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 300; i++) {
        double an = -(double)i * i;
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-y);
    }
    throw ConvergenceError("exp_integral_e1: continued fraction did not converge");
}

}  // namespace fsdist
