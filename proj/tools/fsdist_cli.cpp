#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fsdist/csv.hpp"
#include "fsdist/density.hpp"
#include "fsdist/inequalities.hpp"
#include "fsdist/tail.hpp"
#include "fsdist/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binary mode keeps LF line endings on every platform, which the
// byte-identical-reruns contract depends on.
void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << body;
    out.flush();
    if (!out) throw IoError("failed while writing '" + path + "'");
}

void emit(const std::string& body, const std::string& csv_path) {
    if (csv_path.empty()) {
        std::cout << body;
    } else {
        write_text_file(csv_path, body);
    }
}

std::string fd(double v) { return fsdist::csv::format_double(v); }

int run_density(double t, const std::string& method, double tol, double c_offset,
                const std::string& csv_path) {
    if (!(t > 0.0)) throw std::domain_error("density: require t > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("density: tolerance must be > 0");
    if (!(c_offset > 1.0))
        throw std::domain_error("density: contour offset c must exceed 1");

    fsdist::QuadConfig qcfg;
    qcfg.abs_tol = tol;
    qcfg.rel_tol = tol;
    fsdist::SeriesBudget budget;
    budget.trunc.rel_tol = tol;

    struct Row {
        const char* method;
        double value, err;
        long effort;
    };
    std::vector<Row> rows;
    const bool all = method == "all";
    if (all || method == "branch-cut") {
        fsdist::EvalResult r = fsdist::density_branch_cut({t}, qcfg);
        rows.push_back({"branch-cut", r.value, r.abs_err_estimate, r.effort});
    }
    if (all || method == "series") {
        fsdist::SeriesDiagnostics d = fsdist::density_series({t}, budget);
        // The stopping rule resolves the value to rel_tol; effort counts the
        // (n, r) cells of the double series that were summed.
        rows.push_back({"series", d.value, budget.trunc.rel_tol * std::abs(d.value),
                        (long)d.n_terms_used * d.r_terms_used});
    }
    if (all || method == "bromwich") {
        fsdist::DensityArg arg;
        arg.t = t;
        arg.bromwich_offset = c_offset;
        fsdist::EvalResult r =
            fsdist::density_bromwich(arg, fsdist::default_bromwich_height(t), qcfg);
        rows.push_back({"bromwich", r.value, r.abs_err_estimate, r.effort});
    }

    double max_disc = 0.0;
    for (std::size_t i = 0; i < rows.size(); i++)
        for (std::size_t j = i + 1; j < rows.size(); j++)
            max_disc = std::max(max_disc, std::abs(rows[i].value - rows[j].value));

    std::string body = all ? "t,method,value,err_estimate,effort,discrepancy\n"
                           : "t,method,value,err_estimate,effort\n";
    for (const Row& r : rows) {
        body += fd(t) + "," + r.method + "," + fd(r.value) + "," + fd(r.err) + "," +
                std::to_string(r.effort);
        if (all) body += "," + fd(max_disc);
        body += '\n';
    }
    emit(body, csv_path);
    if (!csv_path.empty()) {
        std::cout << "wrote " << rows.size() << " rows to " << csv_path << "\n";
        if (all) std::cout << "max pairwise discrepancy = " << fd(max_disc) << "\n";
    }
    return kExitOk;
}

int run_tail(double rho, double y, const std::string& method,
             const std::string& csv_path) {
    fsdist::TailParams p;
    p.rho = rho;
    p.y = y;
    std::vector<fsdist::TailValue> vals;
    const bool all = method == "all";
    if (all || method == "quad") vals.push_back(fsdist::tail_quadrature(p));
    if (method == "closed") {
        vals.push_back(fsdist::tail_closed_form(p));
    } else if (all && y <= fsdist::tail_y_cancel) {
        vals.push_back(fsdist::tail_closed_form(p));
    } else if (all) {
        std::cerr << "note: closed form skipped, y > " << fsdist::tail_y_cancel
                  << " cancels past double precision\n";
    }
    if (all || method == "asymptotic") vals.push_back(fsdist::tail_asymptotic(p));
    if (method == "auto") vals.push_back(fsdist::tail_auto(p));

    std::string body = "rho,y,method,bare,normalized,err_estimate\n";
    for (const fsdist::TailValue& v : vals)
        body += fd(rho) + "," + fd(y) + "," + fsdist::method_name(v.method) + "," +
                fd(v.bare) + "," + fd(v.normalized) + "," + fd(v.abs_err_estimate) + "\n";
    emit(body, csv_path);
    if (!csv_path.empty())
        std::cout << "wrote " << vals.size() << " rows to " << csv_path << "\n";
    return kExitOk;
}

int run_ineq(const std::string& which, double nu_min, double nu_max, double x_min,
             double x_max, int samples, std::uint64_t seed,
             const std::string& csv_path) {
    std::vector<fsdist::Inequality> kinds;
    if (which == "all") {
        kinds = {fsdist::Inequality::a1, fsdist::Inequality::a2,
                 fsdist::Inequality::jones};
    } else if (which == "a1") {
        kinds = {fsdist::Inequality::a1};
    } else if (which == "a2") {
        kinds = {fsdist::Inequality::a2};
    } else {
        kinds = {fsdist::Inequality::jones};
    }

    std::string body = "nu,x,inequality,margin,relative_margin,holds\n";
    long violations = 0;
    for (fsdist::Inequality kind : kinds) {
        auto reports = fsdist::sweep(kind, nu_min, nu_max, x_min, x_max, samples, seed);
        const fsdist::MarginReport* tightest = nullptr;
        for (const auto& r : reports) {
            body += fd(r.point.nu) + "," + fd(r.point.x) + "," +
                    fsdist::inequality_name(kind) + "," + fd(r.margin) + "," +
                    fd(r.relative_margin) + "," + fsdist::csv::format_bool(r.holds) +
                    "\n";
            if (!r.holds) violations++;
            if (!tightest || r.relative_margin < tightest->relative_margin)
                tightest = &r;
        }
        std::cerr << fsdist::inequality_name(kind) << ": " << reports.size()
                  << " points, min relative margin " << fd(tightest->relative_margin)
                  << " at nu=" << fd(tightest->point.nu)
                  << " x=" << fd(tightest->point.x) << "\n";
    }
    emit(body, csv_path);
    if (!csv_path.empty())
        std::cout << "wrote " << (long)kinds.size() * samples << " rows to " << csv_path
                  << "\n";
    if (violations > 0) {
        std::cerr << violations << " violation(s) found\n";
        return kExitVerification;
    }
    return kExitOk;
}

int run_verify(const std::string& suite, const std::string& csv_path) {
    fsdist::VerificationReport rep = fsdist::run_suite(suite);
    if (!csv_path.empty()) write_text_file(csv_path, fsdist::report_to_csv(rep));
    std::cout << "suite " << rep.suite << ": " << rep.passed() << " passed, "
              << rep.failed() << " failed (" << fd(rep.wall_seconds) << " s)\n";
    long shown = 0;
    for (const auto& r : rep.records) {
        if (r.pass) continue;
        if (++shown > 20) {
            std::cout << "  ... more failures omitted\n";
            break;
        }
        std::cout << "  FAIL " << r.id << " [" << r.inputs << "] " << r.route_a
                  << " vs " << r.route_b << ": discrepancy " << fd(r.discrepancy)
                  << " > " << fd(r.tolerance) << "\n";
    }
    return rep.all_passed() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Density, integrated-tail, and Bessel-inequality evaluator with "
                 "cross-route verification"};
    app.require_subcommand(1);

    auto* density = app.add_subcommand(
        "density", "Evaluate the density at t by one route or all three");
    double t = 1.0;
    std::string d_method = "all";
    double tol = 1e-12;
    double c_offset = 2.0;
    std::string d_csv;
    density->add_option("--t", t, "Evaluation point, t > 0")->required();
    density->add_option("--method", d_method, "Route (default all)")
        ->check(CLI::IsMember({"branch-cut", "series", "bromwich", "all"}));
    density->add_option("--tol", tol, "Target tolerance (default 1e-12)");
    density->add_option("--c", c_offset, "Bromwich contour offset, c > 1 (default 2)");
    density->add_option("--csv", d_csv, "Write rows to this file instead of stdout");

    auto* tail = app.add_subcommand(
        "tail", "Evaluate the integrated Bessel tail at (rho, y)");
    double rho = 1.0, y = 1.0;
    std::string t_method = "all";
    std::string t_csv;
    tail->add_option("--rho", rho, "Order parameter, rho > 1/2")->required();
    tail->add_option("--y", y, "Lower limit, y > 0")->required();
    tail->add_option("--method", t_method, "Route (default all)")
        ->check(CLI::IsMember({"quad", "closed", "asymptotic", "auto", "all"}));
    tail->add_option("--csv", t_csv, "Write rows to this file instead of stdout");

    auto* ineq = app.add_subcommand(
        "ineq", "Sweep the Bessel inequalities for sign violations");
    std::string which = "all";
    double nu_min = -0.5, nu_max = 10.0, x_min = 0.0, x_max = 100.0;
    int samples = 10000;
    std::uint64_t seed = 42;
    ineq->add_option("--which", which, "Inequality (default all)")
        ->check(CLI::IsMember({"a1", "a2", "jones", "all"}));
    ineq->add_option("--nu-min", nu_min, "Open lower order limit (default -0.5)");
    ineq->add_option("--nu-max", nu_max, "Upper order limit (default 10)");
    ineq->add_option("--x-min", x_min, "Open lower argument limit (default 0)");
    ineq->add_option("--x-max", x_max, "Upper argument limit (default 100)");
    ineq->add_option("--samples", samples, "Points per inequality (default 10000)");
    ineq->add_option("--seed", seed, "Sampling seed (default 42)");
    std::string i_csv;
    ineq->add_option("--csv", i_csv, "Write rows to this file instead of stdout");

    auto* verify = app.add_subcommand(
        "verify", "Run a cross-verification suite and report pass/fail");
    std::string suite = "all";
    std::string v_csv;
    verify->add_option("--suite", suite, "Suite (default all)")
        ->check(CLI::IsMember({"specfun", "density", "tail", "ineq", "all"}));
    verify->add_option("--csv", v_csv, "Write the full check table to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (density->parsed()) return run_density(t, d_method, tol, c_offset, d_csv);
        if (tail->parsed()) return run_tail(rho, y, t_method, t_csv);
        if (ineq->parsed())
            return run_ineq(which, nu_min, nu_max, x_min, x_max, samples, seed, i_csv);
        if (verify->parsed()) return run_verify(suite, v_csv);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const fsdist::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonConvergence;
    }
    return kExitOk;
}
