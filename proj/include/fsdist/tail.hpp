#pragma once

#include "fsdist/common.hpp"
#include "fsdist/quadrature.hpp"

namespace fsdist {

struct TailParams {
    double rho = 1.0;  // > 1/2
    double y = 1.0;    // > 0
};

// bare       = int_y^inf e^{-x} I_{rho-1}(x) / x^rho dx
// normalized = 2^{rho-1} Gamma(rho) * bare
// abs_err_estimate refers to `normalized`; the bare estimate is the same
// value divided by the prefactor.
struct TailValue {
    double bare = 0.0;
    double normalized = 0.0;
    Method method = Method::quadrature;
    double abs_err_estimate = 0.0;
};

// Past this y the alternating 3F3(-2y) of the closed form cancels beyond
// double precision; tail_closed_form refuses and callers switch routes.
inline constexpr double tail_y_cancel = 20.0;
// Route switch for tail_auto; both routes hold 1e-8 agreement on [8, 12].
inline constexpr double tail_y_switch = 10.0;
// k_cap value requesting optimal truncation in tail_asymptotic.
inline constexpr int tail_k_auto = -1;

// Ground truth: direct quadrature of the defining integral with decay hint
// beta = rho + 1/2 (from e^{-x} I_{rho-1}(x) ~ (2 pi x)^{-1/2}).
TailValue tail_quadrature(const TailParams& p, const QuadConfig& cfg = {});

// Closed form: normalized = -gamma + y 3F3(1,1,rho+1/2; 2,2,2rho; -2y)
// - ln(2y) + psi(2rho-1) - psi(rho-1/2). Requires y <= tail_y_cancel.
TailValue tail_closed_form(const TailParams& p, const Truncation& tr = {});

// Lambda(y) = gamma + ln(2y) + psi(rho-1/2) - psi(2rho-1), so that
// normalized = y 3F3(...) - Lambda(y).
double lambda_fn(const TailParams& p);

// Poincare expansion bare ~ (y^{1/2-rho}/sqrt(2 pi)) sum_k (-1)^k
// Gamma(rho+k-1/2) / [(rho+k-1/2) Gamma(rho-k-1/2) k!] (2y)^{-k}.
// k_cap = tail_k_auto stops at optimal truncation (before the smallest term);
// an explicit k_cap >= 0 includes terms up to and including k = k_cap.
// abs_err_estimate carries the first omitted term; when 1/Gamma(rho-k-1/2)
// hits a pole the series terminates exactly and the estimate drops to the
// exponentially small remainder allowance e^{-2y}|value|.
TailValue tail_asymptotic(const TailParams& p, int k_cap = tail_k_auto);

// Dispatch: closed form for y <= tail_y_switch, asymptotic beyond.
TailValue tail_auto(const TailParams& p);

}  // namespace fsdist
