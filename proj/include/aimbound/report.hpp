#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aimbound/aim.hpp"
#include "aimbound/oracle.hpp"

namespace aim {

enum class RunMode { Aim, ExactPT, Oracle, Compare };

struct RunConfig {
    PotentialParams params;
    AimSettings settings;
    std::optional<OracleGrid> grid;  // absent: default_grid(params)
    int oracle_count = 16;           // eigenvalues requested before the negativity filter
    RunMode mode = RunMode::Compare;
};

// One output row. Energies are carried as double from here on: printing is
// capped at 12 significant digits anyway.
struct ComparisonRow {
    int n = 0;
    int ell = 0;
    std::optional<double> e_aim;
    std::optional<double> e_exact;
    std::optional<double> e_oracle;
    std::optional<double> e_reference;
    std::optional<double> abs_diff;  // |e_aim - e_reference|
};

// Dispatch by mode; Compare runs every applicable computation and joins by
// level index. Throws ConfigError for invariant violations (ExactPT needs
// V2 = 0 and ell = 0), NoRootsFound when the scan comes up empty.
std::vector<ComparisonRow> run(const RunConfig& config);

// Iteration settings and oracle grid used for the published-table runs.
// Deeper and more precise than the engine defaults: the slowest levels only
// settle around depth 300, which in turn needs the higher working precision.
AimSettings table_settings(int table_id);
OracleGrid table_grid(int table_id);

// Recompute one published table: AIM, oracle, and (table 2) exact columns
// side by side with the printed reference values.
std::vector<ComparisonRow> reproduce_table(int table_id);

// CSV with the fixed header n,ell,e_aim,e_exact,e_oracle,e_reference,abs_diff;
// empty field for absent values, 12 significant digits, LF endings.
void write_csv(std::ostream& os, const std::vector<ComparisonRow>& rows);
std::string csv_string(const std::vector<ComparisonRow>& rows);
std::vector<ComparisonRow> parse_csv(std::istream& is);

}  // namespace aim
