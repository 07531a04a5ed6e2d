#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "aimbound/real.hpp"

namespace aim {

// Physical inputs of the four-parameter hyperbolic potential
//   V(r) = [V0 + V1 tanh^2(lambda r) + V2 tanh^4(lambda r)] / sinh^2(lambda r).
struct PotentialParams {
    Real v0;
    Real v1;
    Real v2;
    Real lambda = 1;
    int ell = 0;
    Real hbar = 1;
    Real mass = 1;
};

// Throws ConfigError on lambda <= 0 or ell < 0. V0 < 0 is accepted with a
// warning flag (the repulsive-core assumption breaks but nothing else does).
void validate_params(const PotentialParams& p);
bool params_warn_negative_v0(const PotentialParams& p);

enum class ShapeClass { TwoExtrema, InflectionOrMonotone, SingleMinimum };

struct PotentialShape {
    ShapeClass classification;
    // Interior extrema of V(r), ascending in r.
    std::vector<std::pair<Real, Real>> extrema;  // (r, V(r))
    // Lowest potential value seen on the scan (including the r -> 0 end when
    // finite); absent when V >= 0 everywhere scanned.
    std::optional<Real> v_min;
};

// Potential in r and in the transformed coordinate x = 2 tanh^2(lambda r) - 1.
Real v_of_r(const Real& r, const PotentialParams& p);
Real x_of_r(const Real& r, const Real& lambda);
Real r_of_x(const Real& x, const Real& lambda);
Real v_of_x(const Real& x, const PotentialParams& p);

// Closed-form spectrum of the V2 = 0, ell = 0 special case:
//   E_n = -(lambda^2/2) (2n + 1 + sqrt(1/4 + 2 V0/lambda^2)
//                               - sqrt(1/4 - 2 V1/lambda^2))^2,  n = 0..N.
// Empty when the level count N is negative. Throws UnsupportedParams when
// V2 != 0, ell != 0, or a square-root argument is negative.
std::vector<Real> pt_exact_spectrum(const PotentialParams& p);

// Locate extrema of V(r) on a log-spaced scan, refine minima, classify.
PotentialShape classify_potential(const PotentialParams& p);

// Scan floor for the eigenvalue search: 1.05 * v_min when a negative minimum
// exists, otherwise absent (no negative well, no bound states).
std::optional<Real> default_scan_floor(const PotentialParams& p);

}  // namespace aim
