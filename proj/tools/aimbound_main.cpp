#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aimbound/errors.hpp"
#include "aimbound/report.hpp"

namespace {

// Option values captured as strings where they feed arbitrary-precision
// fields, so parsing happens after the working precision is set.
struct CliArgs {
    std::string v0 = "0", v1 = "0", v2 = "0", lambda = "1", hbar = "1", mass = "1";
    int ell = 0;
    std::string x0 = "0", e_min, e_max = "-1e-6", root_tol = "1e-12", conv_tol = "1e-8";
    int k_max = 120, k_stride = 10, scan_points = 400;
    int precision_digits = -1;  // resolved against the environment later
    std::string r_min, r_max;
    int n_points = 20000;
    int count = 16;
    int table = 0;
    std::string out;
};

unsigned resolve_precision(const CliArgs& a) {
    if (a.precision_digits > 0) return static_cast<unsigned>(a.precision_digits);
    if (const char* env = std::getenv("AIMBOUND_PRECISION_DIGITS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v <= 0) throw aim::ConfigError("AIMBOUND_PRECISION_DIGITS must be a positive integer");
        return static_cast<unsigned>(v);
    }
    return 100;
}

aim::PotentialParams make_params(const CliArgs& a) {
    aim::PotentialParams p;
    p.v0 = aim::Real(a.v0);
    p.v1 = aim::Real(a.v1);
    p.v2 = aim::Real(a.v2);
    p.lambda = aim::Real(a.lambda);
    p.ell = a.ell;
    p.hbar = aim::Real(a.hbar);
    p.mass = aim::Real(a.mass);
    aim::validate_params(p);
    if (aim::params_warn_negative_v0(p))
        std::cerr << "warning: V0 < 0 removes the repulsive core assumption\n";
    return p;
}

aim::AimSettings make_settings(const CliArgs& a) {
    aim::AimSettings st;
    st.x0 = aim::Real(a.x0);
    st.k_max = a.k_max;
    st.precision_digits = resolve_precision(a);
    if (!a.e_min.empty()) st.e_min = aim::Real(a.e_min);
    st.e_max = aim::Real(a.e_max);
    st.scan_points = a.scan_points;
    st.root_tol = aim::Real(a.root_tol);
    st.conv_tol = aim::Real(a.conv_tol);
    st.k_stride = a.k_stride;
    return st;
}

std::optional<aim::OracleGrid> make_grid(const CliArgs& a, const aim::PotentialParams& p,
                                         bool n_points_given) {
    if (a.r_min.empty() && a.r_max.empty() && !n_points_given) return std::nullopt;
    aim::OracleGrid g = aim::default_grid(p);
    if (!a.r_min.empty()) g.r_min = std::stod(a.r_min);
    if (!a.r_max.empty()) g.r_max = std::stod(a.r_max);
    if (n_points_given) g.n_points = a.n_points;
    return g;
}

void emit(const std::vector<aim::ComparisonRow>& rows, const std::string& out) {
    if (out.empty()) {
        aim::write_csv(std::cout, rows);
        return;
    }
    std::ofstream os(out, std::ios::binary);
    if (!os) throw aim::ConfigError("cannot open output file: " + out);
    aim::write_csv(os, rows);
}

const char* shape_name(aim::ShapeClass c) {
    switch (c) {
        case aim::ShapeClass::TwoExtrema: return "TwoExtrema";
        case aim::ShapeClass::SingleMinimum: return "SingleMinimum";
        case aim::ShapeClass::InflectionOrMonotone: return "InflectionOrMonotone";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bound states of the four-parameter 1/r^2-singular hyperbolic potential"};
    app.require_subcommand(1);
    CliArgs a;

    // Options live on the top-level app (subcommands fall through to them) so
    // that a flat key=value --config file addresses them all by name.
    app.add_option("--v0", a.v0, "inner strength V0");
    app.add_option("--v1", a.v1, "tanh^2 strength V1");
    app.add_option("--v2", a.v2, "tanh^4 strength V2");
    app.add_option("--lambda", a.lambda, "inverse range lambda > 0");
    app.add_option("--ell", a.ell, "angular momentum")->check(CLI::NonNegativeNumber);
    app.add_option("--hbar", a.hbar, "hbar (default 1)");
    app.add_option("--mass", a.mass, "particle mass (default 1)");
    app.add_option("--x0", a.x0, "series expansion point in (-1,1)");
    app.add_option("--k_max", a.k_max, "deepest iteration (default 120)");
    app.add_option("--precision_digits", a.precision_digits,
                   "working precision, decimal digits (default 100 or AIMBOUND_PRECISION_DIGITS)");
    app.add_option("--e_min", a.e_min, "scan floor (default 1.05 * potential minimum)");
    app.add_option("--e_max", a.e_max, "scan ceiling (default -1e-6)");
    app.add_option("--scan_points", a.scan_points, "energy scan resolution (default 400)");
    app.add_option("--root_tol", a.root_tol, "root bracket tolerance (default 1e-12)");
    app.add_option("--conv_tol", a.conv_tol, "convergence drift tolerance (default 1e-8)");
    app.add_option("--k_stride", a.k_stride, "iterations between convergence checks (default 10)");
    app.add_option("--r_min", a.r_min, "oracle grid start (default 1e-3/lambda)");
    app.add_option("--r_max", a.r_max, "oracle grid end (default 30/lambda)");
    app.add_option("--n_points", a.n_points, "oracle grid points (default 20000)");
    app.add_option("--count", a.count, "oracle eigenvalue budget (default 16)");
    app.add_option("--out", a.out, "output CSV path (default stdout)");
    app.set_config("--config", "", "flat key=value config file; flags override");

    CLI::App* sp = app.add_subcommand("spectrum", "eigenvalues by the iteration method");
    CLI::App* ex = app.add_subcommand("exact-pt", "closed-form spectrum (V2 = 0, ell = 0)");
    CLI::App* orc = app.add_subcommand("oracle", "finite-difference reference spectrum");
    CLI::App* cmp = app.add_subcommand("compare", "all applicable methods side by side");
    CLI::App* rep = app.add_subcommand("reproduce", "recompute a published benchmark table");
    rep->add_option("--table", a.table, "table id: 1, 2, 3, or 4")
        ->required()
        ->check(CLI::Range(1, 4));
    CLI::App* cls = app.add_subcommand("classify", "potential shape and minimum");
    for (CLI::App* sub : {sp, ex, orc, cmp, rep, cls}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // bad flags are configuration errors
    }

    try {
        aim::set_precision_digits(resolve_precision(a));

        if (rep->parsed()) {
            emit(aim::reproduce_table(a.table), a.out);
            return 0;
        }

        const aim::PotentialParams p = make_params(a);

        if (cls->parsed()) {
            const aim::PotentialShape s = aim::classify_potential(p);
            std::cout << "classification: " << shape_name(s.classification) << "\n";
            for (const auto& [r, v] : s.extrema)
                std::cout << "extremum: r = " << aim::dbl(r) << "  V = " << aim::dbl(v) << "\n";
            if (s.v_min)
                std::cout << "v_min: " << aim::dbl(*s.v_min) << "\n";
            else
                std::cout << "v_min: none (V >= 0 on the scan)\n";
            return 0;
        }

        aim::RunConfig cfg;
        cfg.params = p;
        cfg.settings = make_settings(a);
        cfg.oracle_count = a.count;
        cfg.grid = make_grid(a, p, app.count("--n_points") > 0);
        if (sp->parsed()) cfg.mode = aim::RunMode::Aim;
        else if (ex->parsed()) cfg.mode = aim::RunMode::ExactPT;
        else if (orc->parsed()) cfg.mode = aim::RunMode::Oracle;
        else cfg.mode = aim::RunMode::Compare;

        emit(aim::run(cfg), a.out);
        return 0;
    } catch (const aim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const aim::NoRootsFound& e) {
        std::cerr << "no roots: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
}
