#include "fsdist/common.hpp"

namespace fsdist {

const char* method_name(Method m) {
    switch (m) {
        case Method::power_series: return "power-series";
        case Method::asymptotic: return "asymptotic";
        case Method::quadrature: return "quad";
        case Method::closed_form: return "closed";
        case Method::branch_cut: return "branch-cut";
        case Method::double_series: return "series";
        case Method::bromwich: return "bromwich";
    }
    return "unknown";
}

namespace detail {

void validate_truncation(const Truncation& tr) {
    if (!(tr.rel_tol > 0.0))
        throw std::invalid_argument("Truncation: rel_tol must be > 0");
    if (tr.max_terms < 1)
        throw std::invalid_argument("Truncation: max_terms must be >= 1");
    if (tr.consecutive_small < 1)
        throw std::invalid_argument("Truncation: consecutive_small must be >= 1");
}

}  // namespace detail

}  // namespace fsdist
