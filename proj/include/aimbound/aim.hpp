#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "aimbound/jet.hpp"
#include "aimbound/potential.hpp"

namespace aim {

// Settings of the iteration engine. e_min is optional: when absent it is
// seeded from the potential scan floor (1.05 * v_min); a potential with no
// negative well then short-circuits to the no-roots outcome.
struct AimSettings {
    Real x0 = 0;                      // series expansion point, in (-1, 1)
    int k_max = 120;                  // deepest iteration
    unsigned precision_digits = 100;  // working precision for the whole run
    std::optional<Real> e_min;        // scan floor (default 1.05 * v_min)
    Real e_max = Real("-1e-6");       // scan ceiling, strictly below threshold
    int scan_points = 400;
    Real root_tol = Real("1e-12");    // bracket width at which a root is accepted
    Real conv_tol = Real("1e-8");     // successive-stride drift declaring convergence
    int k_stride = 10;                // convergence checked every k_stride iterations
};

// ConfigError on violated invariants: x0 in (-1,1), e_min < e_max < 0 (when
// e_min is present), k_max >= 2*k_stride, scan_points >= 10.
void validate_settings(const AimSettings& s);

// Recurrence state. Orders decrease by exactly one per iteration.
struct AimState {
    Jet lam;       // lambda_k
    Jet s;         // s_k
    Jet lam_prev;  // lambda_{k-1} (empty at k = 0)
    Jet s_prev;    // s_{k-1}
    int k = 0;
};

enum class RootStatus { Converged, MaxIterations, LostRoot };

struct EigenResult {
    int n = 0;
    Real energy;
    int k_converged = 0;  // stride at which convergence was declared, or the last refinement
    Real residual;        // |E at k - E at k-stride| there
    RootStatus status = RootStatus::MaxIterations;
};

// lambda0 and s0 jets of order k_max + 4 at x0, with E substituted:
//   lambda0 = -chi / (2 phi omega)
//   s0      = ell(ell+1) / (2 phi^2 omega eta) + (m/(hbar^2 lambda^2)) (V(x) - E) / (phi^2 omega)
// built from omega = x+1, phi = x-1, chi = 3x+1, eta = arctanh^2(sqrt((x+1)/2)).
std::pair<Jet, Jet> build_coefficients(const PotentialParams& p, const AimSettings& st,
                                       const Real& E);

AimState aim_initial_state(const Jet& lam0, const Jet& s0);

// One recurrence step:
//   lambda_k = lambda'_{k-1} + s_{k-1} + lambda0 * lambda_{k-1}
//   s_k      = s'_{k-1} + s0 * lambda_{k-1}
AimState aim_iterate(const AimState& state, const Jet& lam0, const Jet& s0);

// Termination value Delta_k = lambda_k s_{k-1} - lambda_{k-1} s_k at x0,
// after k iterations from freshly built coefficients.
Real delta_k(const PotentialParams& p, const AimSettings& st, const Real& E, int k);

// Delta at every stride multiple up to k_max (and k_max itself), one pass.
std::vector<std::pair<int, Real>> delta_profile(const PotentialParams& p, const AimSettings& st,
                                                const Real& E);

// Scan [e_min, e_max] for sign changes of Delta at increasing iteration depth,
// refine brackets, track roots across depths, declare convergence when the
// successive-depth drift falls under conv_tol. Throws NoRootsFound when the
// scan never sees a sign change at any depth.
std::vector<EigenResult> find_spectrum(const PotentialParams& p, const AimSettings& st);

}  // namespace aim
