#pragma once

#include <functional>

#include "fsdist/common.hpp"

namespace fsdist {

struct QuadConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_subdivisions = 2000;
};

struct QuadResult {
    double value = 0.0;
    double abs_err_estimate = 0.0;
    long nodes_used = 0;
    bool converged = false;
};

// Globally adaptive Gauss-Kronrod 7/15: the worst panel (largest error
// estimate) is bisected until the summed estimate meets
// max(abs_tol, rel_tol*|value|) or max_subdivisions panels exist.
// converged=false means the panel budget ran out; the achieved estimate is
// still reported. A non-finite integrand value raises ConvergenceError.
QuadResult integrate_finite(const std::function<double(double)>& f,
                            double a, double b, const QuadConfig& cfg = {});

// Maps int_y^inf f(x) dx through x = y e^u onto [0, U] and integrates there.
// decay_exponent_hint is the algebraic decay power beta of f (f ~ x^-beta,
// beta > 1); U = max(30, (ln(1/abs_tol)+5)/(beta-1)) keeps the dropped tail
// below abs_tol/10. Faster-than-algebraic integrands may pass a large hint:
// the floor U = 30 already reaches x = y e^30.
QuadResult integrate_semi_infinite_log(const std::function<double(double)>& f,
                                       double y, double decay_exponent_hint,
                                       const QuadConfig& cfg = {});

namespace detail {
void validate_quad_config(const QuadConfig& cfg);
}

}  // namespace fsdist
