#pragma once

#include <stdexcept>
#include <string>

namespace fsdist {

// Stopping policy shared by every series in the library: a sum stops once
// `consecutive_small` successive terms each fall below rel_tol * |partial sum|.
// A single accidentally small term in an oscillating tail does not stop the sum.
struct Truncation {
    double rel_tol = 1e-14;
    int max_terms = 10000;
    int consecutive_small = 3;
};

enum class Method {
    power_series,
    asymptotic,
    quadrature,
    closed_form,
    branch_cut,
    double_series,
    bromwich,
};

const char* method_name(Method m);

// Scalar result with an attached error estimate. abs_err_estimate is an
// honest estimate, not a rigorous bound. effort counts the dominant cost:
// series terms summed or integrand evaluations.
struct EvalResult {
    double value = 0.0;
    double abs_err_estimate = 0.0;
    long effort = 0;
    Method method = Method::power_series;
};

// A series or iteration hit its term cap before satisfying the stopping rule,
// or a route was asked to run outside the region where it can converge.
class ConvergenceError : public std::runtime_error {
  public:
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {
void validate_truncation(const Truncation& tr);
}

}  // namespace fsdist
