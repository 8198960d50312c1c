#pragma once

#include "fsdist/common.hpp"
#include "fsdist/quadrature.hpp"

namespace fsdist {

struct DensityArg {
    double t = 1.0;
    double bromwich_offset = 2.0;  // the contour abscissa c > 1
};

// Caps for the double series; the stopping rule in `trunc` should terminate
// before any cap is reached (a cap hit raises ConvergenceError, never a
// silent truncation).
struct SeriesBudget {
    int n_max = 12;
    int r_max = 40;
    int k_max = 200;
    Truncation trunc;
};

struct SeriesDiagnostics {
    double value = 0.0;
    double piece_one = 0.0;  // outer sum multiplying the prefactor, first piece
    double piece_two = 0.0;  // second piece; value = (2t e^{-t}/sqrt(pi)) * (one - two)
    int n_terms_used = 0;
    int r_terms_used = 0;
};

// phi(x) = x sqrt(1 - x^2) on |x| <= 1.
double phi(double x);

// Density by the collapsed branch-cut integral. After x = sin(theta) the
// integrand e^{t(sin th - 1) - sin^2 th} cos(th + sin(2 th)/2) cos(th) is
// entire, so the quadrature converges at spectral rate. Valid for t >= 0.
EvalResult density_branch_cut(const DensityArg& arg, const QuadConfig& cfg = {});

// Density by the double series of Bessel-derivative terms. Inner sums have
// all-positive terms; only the outer alternating sum cancels, tamed by the
// (2n)! weights.
SeriesDiagnostics density_series(const DensityArg& arg, const SeriesBudget& budget = {});

// n-fold application of D = (1/t) d/dt to t^{power_shift} I_order(t), by exact
// term-by-term differentiation of the Bessel power series:
//   sum_k [prod_{j<n} (m_k - 2j)] t^{m_k-2n} / (2^{2k+order} k! Gamma(k+order+1)),
// m_k = 2k + order + power_shift. Terms are computed in the log domain so
// neither the t-powers nor the Gamma factors can overflow intermediate values.
double bessel_operator_d(int n_applications, double power_shift, double order,
                         double t, const Truncation& tr = {});

// Density by direct numerical inversion along Re(w) = c: diagnostic grade.
// The integrand decays like 1/|u| only, so the reported abs_err_estimate is
// dominated by the contour truncation bound e^{(c-1)t + 1/2} / (pi U t);
// accuracy improves with larger U and with c close to 1.
EvalResult density_bromwich(const DensityArg& arg, double truncation_height,
                            const QuadConfig& cfg = {});

double default_bromwich_height(double t);  // 400 / t

}  // namespace fsdist
