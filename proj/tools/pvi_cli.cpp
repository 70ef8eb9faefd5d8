// Command-line front end: point evaluation, invariant verification suites,
// and tau-sequence generation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pvi/elliptic.hpp"
#include "pvi/errors.hpp"
#include "pvi/jacobi.hpp"
#include "pvi/painleve.hpp"
#include "pvi/tau.hpp"
#include "pvi/theta.hpp"
#include "pvi/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

struct EvalArgs {
    std::string what;
    double t = 0.5;
    double x = 0.0, y = 0.0;
    double v = 0.0;
    int index = 3;
    std::string format = "json";
};

int run_eval(const EvalArgs& a) {
    pvi::cplx value;
    const pvi::PicardParams pp = pvi::PicardParams::from_xy(a.x, a.y);
    if (a.what == "K") {
        value = pvi::make_context(a.t).K;
    } else if (a.what == "E") {
        value = pvi::make_context(a.t).E;
    } else if (a.what == "theta") {
        const auto ctx = pvi::make_context(a.t);
        value = pvi::theta(pvi::theta_index(a.index), pvi::cplx(a.v, 0.0), ctx);
    } else if (a.what == "sn") {
        const auto ctx = pvi::make_context(a.t);
        value = std::get<0>(pvi::jacobi_sn_cn_dn(pvi::cplx(a.v, 0.0), ctx));
    } else if (a.what == "q0") {
        value = pvi::picard_q0(a.t, pp);
    } else if (a.what == "H0") {
        value = pvi::picard_H0(a.t, pp);
    } else if (a.what == "H1") {
        value = pvi::picard_H1(a.t, pp);
    } else if (a.what == "tau0") {
        value = pvi::tau0(a.t, pp);
    } else if (a.what == "tau1") {
        value = pvi::tau1(a.t, pp);
    } else if (a.what == "scriptE") {
        value = pvi::script_E(a.t, pp);
    } else {
        std::cerr << "eval: unknown --what '" << a.what << "'\n";
        return kExitUsage;
    }
    if (a.format == "csv") {
        std::cout << "t,re,im\n"
                  << fmt15(a.t) << "," << fmt15(value.real()) << ","
                  << fmt15(value.imag()) << "\r\n";
    } else {
        std::cout << "{\"what\": \"" << a.what << "\", \"t\": " << fmt15(a.t)
                  << ", \"value\": {\"re\": " << fmt15(value.real())
                  << ", \"im\": " << fmt15(value.imag()) << "}}\n";
    }
    return kExitOk;
}

int run_verify(const std::string& suite, const pvi::VerifyOptions& opt) {
    std::vector<pvi::CheckResult> results;
    if (suite == "elliptic") {
        results = pvi::verify_elliptic(opt);
    } else if (suite == "theta") {
        results = pvi::verify_theta(opt);
    } else if (suite == "jacobi") {
        results = pvi::verify_jacobi(opt);
    } else if (suite == "painleve") {
        results = pvi::verify_painleve(opt);
    } else if (suite == "tau") {
        results = pvi::verify_tau(opt);
    } else if (suite == "all") {
        results = pvi::verify_all(opt);
    } else {
        std::cerr << "verify: unknown --suite '" << suite << "'\n";
        return kExitUsage;
    }
    std::sort(results.begin(), results.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    bool all_pass = true;
    std::printf("%-45s %8s %14s %10s  %s\n", "check", "grid", "max|resid|",
                "tol", "status");
    for (const auto& r : results) {
        all_pass = all_pass && r.pass();
        std::printf("%-45s %8zu %14.3e %10.1e  %s\n", r.name.c_str(),
                    r.grid_size, r.max_residual, r.tolerance,
                    r.pass() ? "PASS" : "FAIL");
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

struct SequenceArgs {
    double x = 0.3, y = 0.1;
    std::string t_range = "0.2:0.8:2001";
    int m_max = 1;
    int m_min = 0;
    std::string out;
};

int run_sequence(const SequenceArgs& a) {
    double t0, t1;
    std::size_t n;
    {
        std::istringstream is(a.t_range);
        char c1, c2;
        if (!(is >> t0 >> c1 >> t1 >> c2 >> n) || c1 != ':' || c2 != ':') {
            std::cerr << "sequence: bad --t-range, expected a:b:n\n";
            return kExitUsage;
        }
    }
    const pvi::PicardParams pp = pvi::PicardParams::from_xy(a.x, a.y);
    pvi::TauGrid grid = pvi::make_tau_grid(t0, t1, n, pp);
    if (a.m_max > 1) grid = pvi::toda_extend(grid, a.m_max);
    if (a.m_min < 0) grid = pvi::toda_extend(grid, a.m_min);
    if (a.m_max < 1 || a.m_min > 0) {
        // trim seed members outside the requested range
        for (auto it = grid.log_tau.begin(); it != grid.log_tau.end();) {
            if (it->first < a.m_min || it->first > a.m_max) {
                it = grid.log_tau.erase(it);
            } else {
                ++it;
            }
        }
    }
    const std::string json = pvi::tau_grid_to_json(grid);
    if (!a.out.empty()) {
        std::ofstream os(a.out);
        os << json << "\n";
    } else {
        std::cout << json << "\n";
    }
    std::cerr << "members " << grid.log_tau.begin()->first << ".."
              << grid.log_tau.rbegin()->first << ", eroded "
              << grid.eroded_margin << " points per edge ("
              << grid.valid_points() << " of " << grid.t_values.size()
              << " grid points valid)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Picard solution of Painleve VI: evaluation, verification "
                 "and tau-sequences"};
    app.require_subcommand(1);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate one quantity");
    eval->add_option("--what", ea.what,
                     "K|E|theta|sn|q0|H0|H1|tau0|tau1|scriptE")
        ->required();
    eval->add_option("--t", ea.t, "elliptic parameter t in (0,1)");
    eval->add_option("--x", ea.x, "Picard label x");
    eval->add_option("--y", ea.y, "Picard label y");
    eval->add_option("--v", ea.v, "theta/sn argument");
    eval->add_option("--index", ea.index, "theta index 1..4");
    eval->add_option("--format", ea.format, "json|csv");

    std::string suite = "all";
    pvi::VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    verify->add_option("--suite", suite,
                       "elliptic|theta|jacobi|painleve|tau|all");
    verify->add_option("--grid", vopt.grid, "grid density multiplier");
    verify->add_option("--tol-scale", vopt.tol_scale,
                       "scale all tolerances");

    SequenceArgs sa;
    auto* seq = app.add_subcommand("sequence", "generate a tau-sequence grid");
    seq->add_option("--x", sa.x, "Picard label x");
    seq->add_option("--y", sa.y, "Picard label y");
    seq->add_option("--t-range", sa.t_range, "a:b:n uniform grid");
    seq->add_option("--m-max", sa.m_max, "highest member");
    seq->add_option("--m-min", sa.m_min, "lowest member");
    seq->add_option("--out", sa.out, "output JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return run_eval(ea);
        if (verify->parsed()) return run_verify(suite, vopt);
        if (seq->parsed()) return run_sequence(sa);
    } catch (const pvi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
