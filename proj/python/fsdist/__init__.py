"""Density, integrated-tail, and Bessel-inequality evaluator.

Three independent routes to the density (branch-cut quadrature, double
series, contour inversion), three to the integrated Bessel tail (quadrature,
closed form, asymptotic series), signed-margin evaluators for the modified
Bessel inequalities, and the cross-verification suites that tie them
together.
"""

from ._core import (
    CheckRecord,
    ConvergenceError,
    EvalResult,
    FProperties,
    Inequality,
    MarginReport,
    Method,
    SeriesDiagnostics,
    TailValue,
    VerificationReport,
    bessel_i,
    bessel_i_scaled,
    bessel_operator_d,
    density_branch_cut,
    density_bromwich,
    density_series,
    digamma,
    exp_integral_e1,
    f_properties,
    gamma,
    hyp_pfq,
    ln_gamma,
    margin,
    reciprocal_gamma,
    report_to_csv,
    run_suite,
    sweep,
    tail_asymptotic,
    tail_auto,
    tail_closed_form,
    tail_quadrature,
    tail_y_cancel,
    tail_y_switch,
)

__version__ = "0.1.0"

__all__ = [
    "CheckRecord",
    "ConvergenceError",
    "EvalResult",
    "FProperties",
    "Inequality",
    "MarginReport",
    "Method",
    "SeriesDiagnostics",
    "TailValue",
    "VerificationReport",
    "bessel_i",
    "bessel_i_scaled",
    "bessel_operator_d",
    "density_branch_cut",
    "density_bromwich",
    "density_series",
    "digamma",
    "exp_integral_e1",
    "f_properties",
    "gamma",
    "hyp_pfq",
    "ln_gamma",
    "margin",
    "reciprocal_gamma",
    "report_to_csv",
    "run_suite",
    "sweep",
    "tail_asymptotic",
    "tail_auto",
    "tail_closed_form",
    "tail_quadrature",
    "tail_y_cancel",
    "tail_y_switch",
]
