#include "aimbound/report.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

#include "aimbound/errors.hpp"
#include "aimbound/refs.hpp"

namespace aim {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

// AIM levels kept for reporting: converged and still-drifting roots in order;
// lost roots are stale positions and would shift the level indexing.
std::vector<double> aim_levels(const PotentialParams& p, const AimSettings& st) {
    std::vector<double> out;
    for (const EigenResult& r : find_spectrum(p, st)) {
        if (r.status == RootStatus::LostRoot) {
            std::cerr << "note: dropping lost root near E = " << dbl(r.energy)
                      << " (last refined at k = " << r.k_converged << ")\n";
            continue;
        }
        out.push_back(dbl(r.energy));
    }
    return out;
}

std::vector<double> oracle_levels(const PotentialParams& p, const std::optional<OracleGrid>& g,
                                  int count) {
    const OracleGrid grid = g ? *g : default_grid(p);
    const OracleResult res = oracle_spectrum(p, grid, count);
    if (res.grid_too_coarse)
        std::cerr << "warning: oracle grid too coarse, two-grid spread exceeds 1e-4\n";
    return res.levels;
}

}  // namespace

std::vector<ComparisonRow> run(const RunConfig& config) {
    validate_params(config.params);
    const bool pt_applicable = config.params.v2 == 0 && config.params.ell == 0;
    if (config.mode == RunMode::ExactPT && !pt_applicable)
        throw ConfigError("exact-pt mode requires v2 = 0 and ell = 0");

    std::vector<double> aim_col, exact_col, oracle_col;
    switch (config.mode) {
        case RunMode::Aim:
            aim_col = aim_levels(config.params, config.settings);
            break;
        case RunMode::ExactPT:
            for (const Real& e : pt_exact_spectrum(config.params)) exact_col.push_back(dbl(e));
            break;
        case RunMode::Oracle:
            oracle_col = oracle_levels(config.params, config.grid, config.oracle_count);
            break;
        case RunMode::Compare:
            aim_col = aim_levels(config.params, config.settings);
            oracle_col = oracle_levels(config.params, config.grid, config.oracle_count);
            if (pt_applicable)
                for (const Real& e : pt_exact_spectrum(config.params)) exact_col.push_back(dbl(e));
            break;
    }

    std::size_t rows_n = std::max({aim_col.size(), exact_col.size(), oracle_col.size()});
    std::vector<ComparisonRow> rows(rows_n);
    for (std::size_t i = 0; i < rows_n; ++i) {
        rows[i].n = static_cast<int>(i);
        rows[i].ell = config.params.ell;
        if (i < aim_col.size()) rows[i].e_aim = aim_col[i];
        if (i < exact_col.size()) rows[i].e_exact = exact_col[i];
        if (i < oracle_col.size()) rows[i].e_oracle = oracle_col[i];
    }
    if (rows.empty()) throw NoRootsFound("no levels in the requested window");
    return rows;
}

AimSettings table_settings(int table_id) {
    AimSettings st;
    st.precision_digits = 160;
    st.k_stride = 40;
    switch (table_id) {
        case 1:
        case 2:
        case 4:
            st.k_max = 300;
            break;
        case 3:
            st.k_max = 280;
            break;
        default:
            throw ConfigError("table id must be 1, 2, 3, or 4");
    }
    return st;
}

OracleGrid table_grid(int table_id) {
    if (table_id == 4) {
        // V0 = 0 removes the repulsive core, the wavefunction only vanishes
        // linearly at the origin and the Dirichlet wall must sit much deeper;
        // the shallowest level also needs a longer tail.
        OracleGrid g;
        g.r_min = 1e-6;
        g.r_max = 45.0;
        g.n_points = 30000;
        return g;
    }
    OracleGrid g;  // lambda = 1 for every table
    return g;
}

std::vector<ComparisonRow> reproduce_table(int table_id) {
    const std::vector<refs::Cell> ref = refs::reference_column(table_id);
    const AimSettings st = table_settings(table_id);
    const OracleGrid grid = table_grid(table_id);

    std::vector<ComparisonRow> rows;
    for (int ell : refs::table_ells(table_id)) {
        PotentialParams p = refs::table_params(table_id);
        p.ell = ell;

        int n_ref = 0;
        for (const refs::Cell& c : ref)
            if (c.ell == ell) ++n_ref;

        const std::vector<double> aim_col = aim_levels(p, st);
        const std::vector<double> oracle_col = oracle_levels(p, grid, n_ref + 4);
        std::vector<double> exact_col;
        if (table_id == 2)
            for (const Real& e : pt_exact_spectrum(p)) exact_col.push_back(dbl(e));

        if (static_cast<int>(aim_col.size()) != n_ref)
            std::cerr << "note: table " << table_id << " ell " << ell << ": "
                      << aim_col.size() << " roots tracked, " << n_ref
                      << " reference levels\n";

        for (const refs::Cell& c : ref) {
            if (c.ell != ell) continue;
            ComparisonRow row;
            row.n = c.n;
            row.ell = ell;
            row.e_reference = c.value;
            if (c.n < static_cast<int>(aim_col.size())) row.e_aim = aim_col[c.n];
            if (c.n < static_cast<int>(exact_col.size())) row.e_exact = exact_col[c.n];
            if (c.n < static_cast<int>(oracle_col.size())) row.e_oracle = oracle_col[c.n];
            if (row.e_aim) row.abs_diff = std::abs(*row.e_aim - c.value);
            rows.push_back(row);
        }
    }
    return rows;
}

void write_csv(std::ostream& os, const std::vector<ComparisonRow>& rows) {
    os << "n,ell,e_aim,e_exact,e_oracle,e_reference,abs_diff\n";
    for (const ComparisonRow& r : rows) {
        os << r.n << ',' << r.ell << ',' << fmt_opt(r.e_aim) << ',' << fmt_opt(r.e_exact)
           << ',' << fmt_opt(r.e_oracle) << ',' << fmt_opt(r.e_reference) << ','
           << fmt_opt(r.abs_diff) << '\n';
    }
}

std::string csv_string(const std::vector<ComparisonRow>& rows) {
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
}

std::vector<ComparisonRow> parse_csv(std::istream& is) {
    std::vector<ComparisonRow> rows;
    std::string line;
    if (!std::getline(is, line)) return rows;
    if (line != "n,ell,e_aim,e_exact,e_oracle,e_reference,abs_diff")
        throw ConfigError("csv: unexpected header: " + line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                f.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        f.push_back(cur);
        if (f.size() != 7) throw ConfigError("csv: expected 7 fields, got line: " + line);
        ComparisonRow r;
        r.n = std::stoi(f[0]);
        r.ell = std::stoi(f[1]);
        auto opt = [](const std::string& s) -> std::optional<double> {
            if (s.empty()) return std::nullopt;
            return std::stod(s);
        };
        r.e_aim = opt(f[2]);
        r.e_exact = opt(f[3]);
        r.e_oracle = opt(f[4]);
        r.e_reference = opt(f[5]);
        r.abs_diff = opt(f[6]);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace aim
