#pragma once

#include <vector>

#include "fsdist/common.hpp"

namespace fsdist {

// ln Gamma(x) for x > 0. Relative error <= 1e-13 on (0, 1e6].
double ln_gamma(double x);

// Gamma(x) for x not in {0, -1, -2, ...}; reflection is used for x < 0.
double gamma(double x);

// 1/Gamma(x), entire in x: returns exactly 0.0 at non-positive integers.
double reciprocal_gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x) for x > 0. Absolute error <= 1e-13.
double digamma(double x);

// Rising factorial (a)_k = a(a+1)...(a+k-1), iterated product so that
// non-positive `a` is exact. Throws std::overflow_error past double range.
double pochhammer(double a, int k);

// Modified Bessel function of the first kind, nu >= -1/2, x >= 0.
// bessel_i throws std::overflow_error for x > 700; bessel_i_scaled returns
// e^{-x} I_nu(x) and never overflows.
EvalResult bessel_i(double nu, double x, const Truncation& tr = {});
EvalResult bessel_i_scaled(double nu, double x, const Truncation& tr = {});

struct PfqSpec {
    std::vector<double> numerator_params;
    std::vector<double> denominator_params;
    double z = 0.0;
};

// Generalized hypergeometric pFq by term recursion
//   term_{l+1} = term_l * (prod(a_i+l)/prod(b_j+l)) * z/(l+1).
// Converges for any finite z when p <= q, for |z| < 1 when p = q+1
// (std::domain_error otherwise). Denominator parameters must not be
// non-positive integers (std::invalid_argument). The partial sums are
// accumulated in extended precision: the alternating 3F3 of the tail module
// cancels ~|z| digits and plain doubles are not enough near z = -40.
EvalResult hyp_pfq(const PfqSpec& spec, const Truncation& tr = {});

EvalResult hyp_1f1(double a, double b, double z, const Truncation& tr = {});
EvalResult hyp_2f1(double a, double b, double c, double z, const Truncation& tr = {});
EvalResult hyp_3f2(double a1, double a2, double a3, double b1, double b2,
                   double z, const Truncation& tr = {});
EvalResult hyp_3f3(double a1, double a2, double a3, double b1, double b2, double b3,
                   double z, const Truncation& tr = {});

// E1(y) = int_y^inf e^{-t}/t dt for y > 0: ascending series for y <= 1,
// continued fraction for y > 1. Relative error <= 1e-12.
double exp_integral_e1(double y);

namespace detail {

// sin(pi x) with argument reduction so integers map to exactly +-0.
double sin_pi(double x);

// ln|Gamma(x)| for any non-pole x; `sign` receives the sign of Gamma(x).
double ln_abs_gamma(double x, int& sign);

// Series and large-argument kernels behind bessel_i_scaled, exposed so the
// switchover region can be cross-checked route against route.
EvalResult bessel_i_scaled_series(double nu, double x, const Truncation& tr);
EvalResult bessel_i_scaled_asymptotic(double nu, double x, const Truncation& tr);

// Switch rule: the asymptotic route needs x >= max(x_switch, 0.6 nu^2).
inline constexpr double bessel_x_switch = 30.0;
bool bessel_use_asymptotic(double nu, double x);

}  // namespace detail

}  // namespace fsdist
