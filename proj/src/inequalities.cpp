#include "fsdist/inequalities.hpp"

#include <cfloat>
#include <cmath>
#include <random>

#include "fsdist/specfun.hpp"

namespace fsdist {

namespace {

void validate_point(const IneqPoint& p) {
    if (!(p.nu > -0.5))
        throw std::domain_error("inequalities: require nu > -1/2");
    if (!(p.x > 0.0))
        throw std::domain_error("inequalities: require x > 0");
}

MarginReport make_report(const IneqPoint& p, double lhs, double rhs) {
    MarginReport r;
    r.point = p;
    r.margin = lhs - rhs;
    r.relative_margin = (lhs != 0.0) ? r.margin / lhs : 0.0;
    r.holds = r.margin > 0.0;
    return r;
}

}  // namespace

const char* inequality_name(Inequality which) {
    switch (which) {
        case Inequality::a1: return "a1";
        case Inequality::a2: return "a2";
        case Inequality::jones: return "jones";
    }
    return "unknown";
}

MarginReport margin_a1(const IneqPoint& p) {
    validate_point(p);
    double i0 = bessel_i_scaled(p.nu, p.x).value;
    double i1 = bessel_i_scaled(p.nu + 1.0, p.x).value;
    double i2 = bessel_i_scaled(p.nu + 2.0, p.x).value;
    double lhs = i0 * i1 / p.x;
    double rhs = i1 * i1 - i0 * i2;
    return make_report(p, lhs, rhs);
}

MarginReport margin_a2(const IneqPoint& p) {
    validate_point(p);
    double i0 = bessel_i_scaled(p.nu, p.x).value;
    double i1 = bessel_i_scaled(p.nu + 1.0, p.x).value;
    double rhs = (1.0 + (2.0 * p.nu + 1.0) / (2.0 * p.x)) * i1;
    return make_report(p, i0, rhs);
}

MarginReport margin_jones(const IneqPoint& p) {
    validate_point(p);
    double i0 = bessel_i_scaled(p.nu, p.x).value;
    double i1 = bessel_i_scaled(p.nu + 1.0, p.x).value;
    return make_report(p, i0, i1);
}

MarginReport margin(Inequality which, const IneqPoint& p) {
    switch (which) {
        case Inequality::a1: return margin_a1(p);
        case Inequality::a2: return margin_a2(p);
        case Inequality::jones: return margin_jones(p);
    }
    throw std::invalid_argument("margin: unknown inequality");
}

FProperties f_properties(const IneqPoint& p, double h) {
    validate_point(p);
    if (!(h > 0.0) || !(h < 0.5 * p.x))
        throw std::invalid_argument("f_properties: step must satisfy 0 < h < x/2");
    const double nu = p.nu, x = p.x;
    double i0 = bessel_i_scaled(nu, x).value;
    double i1 = bessel_i_scaled(nu + 1.0, x).value;
    double i2 = bessel_i_scaled(nu + 2.0, x).value;
    double xp = std::pow(x, -nu);

    FProperties r;
    r.f = xp * i0;
    r.f_decreasing_margin = xp * (i0 - i1);
    // With u = x^-nu I_nu: u' = x^-nu I_{nu+1}, u'' = x^-nu (I_{nu+1}/x + I_{nu+2}),
    // and f f'' - f'^2 = e^-2x (u u'' - u'^2), so the exponential weights of the
    // scaled Bessel values cancel in this combination.
    double u = xp * i0;
    double up = xp * i1;
    double upp = xp * (i1 / x + i2);
    r.log_convexity_margin = u * upp - up * up;

    auto f_at = [nu](double s) {
        return std::pow(s, -nu) * bessel_i_scaled(nu, s).value;
    };
    double fd = (f_at(x + h) - f_at(x - h)) / (2.0 * h);
    double analytic = -r.f_decreasing_margin;
    double denom = std::max(std::abs(analytic), DBL_MIN);
    r.fd_mismatch = std::abs(fd - analytic) / denom;
    return r;
}

std::vector<MarginReport> sweep(Inequality which, double nu_min, double nu_max,
                                double x_min, double x_max, int samples,
                                std::uint64_t seed) {
    if (!(nu_min >= -0.5))
        throw std::invalid_argument("sweep: nu range must stay within nu > -1/2");
    if (!(x_min >= 0.0))
        throw std::invalid_argument("sweep: x range must stay within x > 0");
    if (!(nu_max > nu_min) || !(x_max > x_min))
        throw std::invalid_argument("sweep: ranges must be non-empty");
    if (samples < 1)
        throw std::invalid_argument("sweep: need at least one sample");

    std::mt19937_64 rng(seed);
    // Uniform in (0, 1]: portable and deterministic across platforms, unlike
    // std::uniform_real_distribution.
    auto u01 = [&rng]() { return (double)((rng() >> 11) + 1) * 0x1p-53; };
    // Log-uniform offset in (1e-9, 1e-3]: probes the open edge without ever
    // touching it.
    auto edge_offset = [&u01]() { return 1e-3 * std::pow(10.0, -6.0 * u01()); };

    std::vector<MarginReport> out;
    out.reserve(samples);
    for (int i = 0; i < samples; i++) {
        IneqPoint p;
        switch (i & 3) {
            case 0:
            case 1:
                p.nu = nu_min + (nu_max - nu_min) * u01();
                p.x = x_min + (x_max - x_min) * u01();
                break;
            case 2:
                p.nu = nu_min + edge_offset();
                p.x = x_min + (x_max - x_min) * u01();
                break;
            default:
                p.nu = nu_min + (nu_max - nu_min) * u01();
                p.x = x_min + edge_offset();
                break;
        }
        out.push_back(margin(which, p));
    }
    return out;
}

}  // namespace fsdist
