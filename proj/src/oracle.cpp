#include "aimbound/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "aimbound/errors.hpp"

namespace aim {

OracleGrid default_grid(const PotentialParams& p) {
    const double lam = dbl(p.lambda);
    OracleGrid g;
    g.r_min = 1e-3 / lam;
    g.r_max = 30.0 / lam;
    g.n_points = 20000;
    return g;
}

namespace {

double v_eff(double r, double v0, double v1, double v2, double lam, int ell) {
    const double t = std::tanh(lam * r);
    const double s = std::sinh(lam * r);
    const double t2 = t * t;
    return (v0 + t2 * (v1 + t2 * v2)) / (s * s) + 0.5 * ell * (ell + 1) / (r * r);
}

}  // namespace

// Eigenvalue count below sigma: negative pivots of the shifted LDL^T sweep.
int sturm_count_below(const TridiagonalOperator& op, double sigma) {
    const double tiny = 1e-300;
    int count = 0;
    double q = op.diag[0] - sigma;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < op.diag.size(); ++i) {
        if (std::abs(q) < tiny) q = q < 0 ? -tiny : tiny;
        const double e = op.offdiag[i - 1];
        q = (op.diag[i] - sigma) - e * e / q;
        if (q < 0) ++count;
    }
    return count;
}

TridiagonalOperator discretize(const PotentialParams& p, const OracleGrid& grid) {
    if (!(grid.r_min > 0) || !(grid.r_min < grid.r_max))
        throw ConfigError("oracle grid: need 0 < r_min < r_max");
    if (grid.n_points < 100) throw ConfigError("oracle grid: n_points must be at least 100");
    const double v0 = dbl(p.v0), v1 = dbl(p.v1), v2 = dbl(p.v2), lam = dbl(p.lambda);
    const int n = grid.n_points;
    const double h = (grid.r_max - grid.r_min) / (n - 1);
    const int m = n - 2;  // interior points carry the unknowns
    TridiagonalOperator op;
    op.diag.resize(m);
    op.offdiag.assign(m - 1, -0.5 / (h * h));
    for (int j = 0; j < m; ++j) {
        const double r = grid.r_min + h * (j + 1);
        op.diag[j] = 1.0 / (h * h) + v_eff(r, v0, v1, v2, lam, p.ell);
    }
    return op;
}

std::vector<double> eigen_bisect(const TridiagonalOperator& op, int count) {
    if (count < 1) throw ConfigError("eigen_bisect: count must be positive");
    const int m = static_cast<int>(op.diag.size());
    if (count > m) count = m;

    // Gershgorin bounds.
    double lo = op.diag[0], hi = op.diag[0];
    for (int i = 0; i < m; ++i) {
        double radius = 0;
        if (i > 0) radius += std::abs(op.offdiag[i - 1]);
        if (i < m - 1) radius += std::abs(op.offdiag[i]);
        lo = std::min(lo, op.diag[i] - radius);
        hi = std::max(hi, op.diag[i] + radius);
    }

    std::vector<double> out(count);
    for (int idx = 0; idx < count; ++idx) {
        double a = lo, b = hi;
        // Smallest sigma with count(sigma) >= idx+1.
        while (b - a > 1e-10) {
            const double mid = 0.5 * (a + b);
            if (sturm_count_below(op, mid) >= idx + 1) b = mid; else a = mid;
        }
        out[idx] = 0.5 * (a + b);
        lo = out[idx];  // eigenvalues are found in ascending order
    }
    return out;
}

OracleResult oracle_spectrum(const PotentialParams& p, const OracleGrid& grid, int count) {
    validate_params(p);
    OracleResult res;
    if (count < 1) return res;

    const TridiagonalOperator coarse = discretize(p, grid);
    OracleGrid fine_grid = grid;
    fine_grid.n_points = 2 * grid.n_points;
    const TridiagonalOperator fine = discretize(p, fine_grid);

    const std::vector<double> ec = eigen_bisect(coarse, count);
    const std::vector<double> ef = eigen_bisect(fine, count);

    for (std::size_t i = 0; i < ec.size() && i < ef.size(); ++i) {
        const double extrap = (4.0 * ef[i] - ec[i]) / 3.0;
        if (extrap >= 0) break;  // spectrum ascends; the first non-negative ends it
        res.levels.push_back(extrap);
        res.raw_coarse.push_back(ec[i]);
        res.raw_fine.push_back(ef[i]);
        if (std::abs(ef[i] - ec[i]) > 1e-4) res.grid_too_coarse = true;
    }
    return res;
}

}  // namespace aim
