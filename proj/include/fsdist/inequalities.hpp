#pragma once

#include <cstdint>
#include <vector>

#include "fsdist/common.hpp"

namespace fsdist {

struct IneqPoint {
    double nu = 0.0;  // > -1/2
    double x = 1.0;   // > 0
};

// margin = left side - right side, computed in exponentially scaled Bessel
// units (every term of one inequality shares the same e^{-x} or e^{-2x}
// factor, so the sign is scale-invariant and sweeps reach x = 700 without
// overflow). relative_margin divides by the left side.
struct MarginReport {
    IneqPoint point;
    double margin = 0.0;
    double relative_margin = 0.0;
    bool holds = false;
};

enum class Inequality { a1, a2, jones };

const char* inequality_name(Inequality which);

// (1/x) I_nu I_{nu+1} > I_{nu+1}^2 - I_nu I_{nu+2}
MarginReport margin_a1(const IneqPoint& p);
// I_nu > (1 + (2nu+1)/(2x)) I_{nu+1}
MarginReport margin_a2(const IneqPoint& p);
// I_nu > I_{nu+1}
MarginReport margin_jones(const IneqPoint& p);

MarginReport margin(Inequality which, const IneqPoint& p);

// Properties of f(x) = e^{-x} x^{-nu} I_nu(x):
//   f_decreasing_margin  = -f'(x) = x^{-nu} (e^{-x}I_nu - e^{-x}I_{nu+1}), > 0;
//   log_convexity_margin = g g'' - (g')^2 in scaled units, with
//     g = x^{-nu} I_nu, g' = x^{-nu} I_{nu+1}, g'' = x^{-nu-1} I_{nu+1} + x^{-nu} I_{nu+2},
//     equal to x^{-2nu} times the margin_a1 expression;
//   fd_mismatch          = |analytic f' - centered difference| / |f'| at step h.
struct FProperties {
    double f = 0.0;
    double f_decreasing_margin = 0.0;
    double log_convexity_margin = 0.0;
    double fd_mismatch = 0.0;
};

// Requires 0 < h < x/2.
FProperties f_properties(const IneqPoint& p, double h);

// Deterministic falsification sweep: `samples` points drawn from
// mt19937_64(seed), half of them within 1e-3 of the open domain edges
// (nu -> nu_min, x -> x_min) where the margins degenerate. Ranges are open
// at the minima: nu_min >= -1/2 and x_min >= 0 are accepted as exclusive
// limits and never sampled exactly. Violations are data (holds=false), not
// exceptions.
std::vector<MarginReport> sweep(Inequality which, double nu_min, double nu_max,
                                double x_min, double x_max, int samples,
                                std::uint64_t seed);

}  // namespace fsdist
