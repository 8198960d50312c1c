#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fsdist/common.hpp"
#include "fsdist/csv.hpp"
#include "fsdist/density.hpp"
#include "fsdist/inequalities.hpp"
#include "fsdist/quadrature.hpp"
#include "fsdist/specfun.hpp"
#include "fsdist/tail.hpp"
#include "fsdist/verify.hpp"

namespace py = pybind11;
using namespace fsdist;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Density, integrated-tail, and Bessel-inequality evaluator with "
              "cross-route verification";

    py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                             PyExc_RuntimeError);

    py::enum_<Method>(m, "Method")
        .value("power_series", Method::power_series)
        .value("asymptotic", Method::asymptotic)
        .value("quadrature", Method::quadrature)
        .value("closed_form", Method::closed_form)
        .value("branch_cut", Method::branch_cut)
        .value("double_series", Method::double_series)
        .value("bromwich", Method::bromwich);

    py::enum_<Inequality>(m, "Inequality")
        .value("a1", Inequality::a1)
        .value("a2", Inequality::a2)
        .value("jones", Inequality::jones);

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("value", &EvalResult::value)
        .def_readonly("abs_err_estimate", &EvalResult::abs_err_estimate)
        .def_readonly("effort", &EvalResult::effort)
        .def_readonly("method", &EvalResult::method)
        .def("__repr__", [](const EvalResult& r) {
            return "EvalResult(value=" + csv::format_double(r.value) +
                   ", abs_err_estimate=" + csv::format_double(r.abs_err_estimate) +
                   ", method=" + method_name(r.method) + ")";
        });

    py::class_<SeriesDiagnostics>(m, "SeriesDiagnostics")
        .def_readonly("value", &SeriesDiagnostics::value)
        .def_readonly("piece_one", &SeriesDiagnostics::piece_one)
        .def_readonly("piece_two", &SeriesDiagnostics::piece_two)
        .def_readonly("n_terms_used", &SeriesDiagnostics::n_terms_used)
        .def_readonly("r_terms_used", &SeriesDiagnostics::r_terms_used)
        .def("__repr__", [](const SeriesDiagnostics& d) {
            return "SeriesDiagnostics(value=" + csv::format_double(d.value) + ")";
        });

    py::class_<TailValue>(m, "TailValue")
        .def_readonly("bare", &TailValue::bare)
        .def_readonly("normalized", &TailValue::normalized)
        .def_readonly("method", &TailValue::method)
        .def_readonly("abs_err_estimate", &TailValue::abs_err_estimate)
        .def("__repr__", [](const TailValue& v) {
            return "TailValue(bare=" + csv::format_double(v.bare) +
                   ", normalized=" + csv::format_double(v.normalized) +
                   ", method=" + method_name(v.method) + ")";
        });

    py::class_<MarginReport>(m, "MarginReport")
        .def_property_readonly("nu",
                               [](const MarginReport& r) { return r.point.nu; })
        .def_property_readonly("x", [](const MarginReport& r) { return r.point.x; })
        .def_readonly("margin", &MarginReport::margin)
        .def_readonly("relative_margin", &MarginReport::relative_margin)
        .def_readonly("holds", &MarginReport::holds)
        .def("__repr__", [](const MarginReport& r) {
            return "MarginReport(nu=" + csv::format_double(r.point.nu) +
                   ", x=" + csv::format_double(r.point.x) +
                   ", margin=" + csv::format_double(r.margin) +
                   ", holds=" + csv::format_bool(r.holds) + ")";
        });

    py::class_<FProperties>(m, "FProperties")
        .def_readonly("f", &FProperties::f)
        .def_readonly("f_decreasing_margin", &FProperties::f_decreasing_margin)
        .def_readonly("log_convexity_margin", &FProperties::log_convexity_margin)
        .def_readonly("fd_mismatch", &FProperties::fd_mismatch);

    py::class_<CheckRecord>(m, "CheckRecord")
        .def_readonly("suite", &CheckRecord::suite)
        .def_readonly("id", &CheckRecord::id)
        .def_readonly("inputs", &CheckRecord::inputs)
        .def_readonly("route_a", &CheckRecord::route_a)
        .def_readonly("route_b", &CheckRecord::route_b)
        .def_readonly("value_a", &CheckRecord::value_a)
        .def_readonly("value_b", &CheckRecord::value_b)
        .def_readonly("discrepancy", &CheckRecord::discrepancy)
        .def_readonly("tolerance", &CheckRecord::tolerance)
        .def_readonly("pass_", &CheckRecord::pass)
        .def("__repr__", [](const CheckRecord& r) {
            return "CheckRecord(id=" + r.id + ", pass=" + csv::format_bool(r.pass) +
                   ")";
        });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("suite", &VerificationReport::suite)
        .def_readonly("records", &VerificationReport::records)
        .def_readonly("wall_seconds", &VerificationReport::wall_seconds)
        .def("passed", &VerificationReport::passed)
        .def("failed", &VerificationReport::failed)
        .def("all_passed", &VerificationReport::all_passed)
        .def("__repr__", [](const VerificationReport& r) {
            return "VerificationReport(suite=" + r.suite +
                   ", passed=" + std::to_string(r.passed()) +
                   ", failed=" + std::to_string(r.failed()) + ")";
        });

    // density
    m.def(
        "density_branch_cut",
        [](double t) { return density_branch_cut({t, 2.0}); }, py::arg("t"),
        "Density by the collapsed branch-cut integral; reference route");
    m.def(
        "density_series", [](double t) { return density_series({t, 2.0}); },
        py::arg("t"), "Density by the double series of Bessel-derivative terms");
    m.def(
        "density_bromwich",
        [](double t, double c, double height) {
            if (height <= 0.0) height = default_bromwich_height(t);
            return density_bromwich({t, c}, height);
        },
        py::arg("t"), py::arg("c") = 2.0, py::arg("height") = 0.0,
        "Density by direct contour inversion; diagnostic grade. height <= 0 "
        "selects the default 400/t window");
    m.def("bessel_operator_d",
          [](int n, double power_shift, double order, double t) {
              return bessel_operator_d(n, power_shift, order, t);
          },
          py::arg("n_applications"), py::arg("power_shift"), py::arg("order"),
          py::arg("t"),
          "n-fold application of (1/t) d/dt to t^power_shift I_order(t)");

    // integrated tail
    m.def(
        "tail_quadrature",
        [](double rho, double y) { return tail_quadrature({rho, y}); },
        py::arg("rho"), py::arg("y"));
    m.def(
        "tail_closed_form",
        [](double rho, double y) { return tail_closed_form({rho, y}); },
        py::arg("rho"), py::arg("y"));
    m.def(
        "tail_asymptotic",
        [](double rho, double y, int k_cap) {
            return tail_asymptotic({rho, y}, k_cap);
        },
        py::arg("rho"), py::arg("y"), py::arg("k_cap") = tail_k_auto);
    m.def(
        "tail_auto", [](double rho, double y) { return tail_auto({rho, y}); },
        py::arg("rho"), py::arg("y"));
    m.attr("tail_y_cancel") = tail_y_cancel;
    m.attr("tail_y_switch") = tail_y_switch;

    // inequalities
    m.def(
        "margin",
        [](Inequality which, double nu, double x) {
            return margin(which, {nu, x});
        },
        py::arg("which"), py::arg("nu"), py::arg("x"),
        "Signed margin (left minus right) of one inequality at a point");
    m.def("sweep", &sweep, py::arg("which"), py::arg("nu_min"), py::arg("nu_max"),
          py::arg("x_min"), py::arg("x_max"), py::arg("samples"), py::arg("seed"),
          "Deterministic boundary-biased falsification sweep");
    m.def(
        "f_properties",
        [](double nu, double x, double h) { return f_properties({nu, x}, h); },
        py::arg("nu"), py::arg("x"), py::arg("h"),
        "Monotonicity and log-convexity margins of f(x) = e^-x x^-nu I_nu(x)");

    // special functions
    m.def("bessel_i", [](double nu, double x) { return bessel_i(nu, x); },
          py::arg("nu"), py::arg("x"));
    m.def("bessel_i_scaled",
          [](double nu, double x) { return bessel_i_scaled(nu, x); },
          py::arg("nu"), py::arg("x"));
    m.def("gamma", &fsdist::gamma, py::arg("x"));
    m.def("ln_gamma", &ln_gamma, py::arg("x"));
    m.def("reciprocal_gamma", &reciprocal_gamma, py::arg("x"));
    m.def("digamma", &digamma, py::arg("x"));
    m.def("exp_integral_e1", &exp_integral_e1, py::arg("y"));
    m.def(
        "hyp_pfq",
        [](const std::vector<double>& a, const std::vector<double>& b, double z) {
            return hyp_pfq({a, b, z});
        },
        py::arg("numerator_params"), py::arg("denominator_params"), py::arg("z"),
        "Generalized hypergeometric pFq by term recursion");

    // verification
    m.def("run_suite", &run_suite, py::arg("suite"),
          "Run a named cross-verification suite "
          "(specfun|quadrature|density|tail|ineq|all)");
    m.def("report_to_csv", &report_to_csv, py::arg("report"));
}
