#pragma once

#include <vector>

#include "aimbound/potential.hpp"

namespace aim {

// Radial grid for the reference eigensolver. Defaults are scaled by 1/lambda
// when built through default_grid().
struct OracleGrid {
    double r_min = 1e-3;
    double r_max = 30.0;
    int n_points = 20000;
};

OracleGrid default_grid(const PotentialParams& p);

// Symmetric tridiagonal operator, the discretized radial Hamiltonian.
struct TridiagonalOperator {
    std::vector<double> diag;
    std::vector<double> offdiag;  // one shorter than diag
};

struct OracleResult {
    std::vector<double> levels;      // Richardson-extrapolated, negative only
    std::vector<double> raw_coarse;  // same levels on the base grid
    std::vector<double> raw_fine;    // and on the doubled grid
    bool grid_too_coarse = false;    // two-grid spread above 1e-4 somewhere
};

// Three-point discretization of -u''/2 + [ell(ell+1)/(2 r^2) + V(r)] u with
// Dirichlet ends at r_min and r_max. The oracle runs in ordinary double
// precision on purpose: its error budget is dominated by the O(h^2) scheme,
// and it shares no code with the series engine it arbitrates.
TridiagonalOperator discretize(const PotentialParams& p, const OracleGrid& grid);

// Number of eigenvalues strictly below sigma (negative pivots of the shifted
// LDL^T sweep).
int sturm_count_below(const TridiagonalOperator& op, double sigma);

// Lowest `count` eigenvalues via Sturm-count bisection, 1e-10 absolute.
std::vector<double> eigen_bisect(const TridiagonalOperator& op, int count);

// discretize -> eigen_bisect on (n_points, 2 n_points), Richardson-extrapolate
// E = (4 E_fine - E_coarse)/3, keep negative levels.
OracleResult oracle_spectrum(const PotentialParams& p, const OracleGrid& grid, int count);

}  // namespace aim
