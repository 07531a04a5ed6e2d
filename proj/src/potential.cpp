#include "aimbound/potential.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include "aimbound/errors.hpp"

namespace aim {

void validate_params(const PotentialParams& p) {
    if (p.lambda <= 0) throw ConfigError("lambda must be positive");
    if (p.ell < 0) throw ConfigError("ell must be non-negative");
    if (p.hbar <= 0 || p.mass <= 0) throw ConfigError("hbar and mass must be positive");
}

bool params_warn_negative_v0(const PotentialParams& p) { return p.v0 < 0; }

Real v_of_r(const Real& r, const PotentialParams& p) {
    if (r <= 0) throw DomainError("v_of_r: r must be positive");
    const Real u = p.lambda * r;
    const Real t2 = tanh(u) * tanh(u);
    const Real s = sinh(u);
    return (p.v0 + t2 * (p.v1 + t2 * p.v2)) / (s * s);
}

Real x_of_r(const Real& r, const Real& lambda) {
    if (r <= 0) throw DomainError("x_of_r: r must be positive");
    const Real t = tanh(lambda * r);
    return 2 * t * t - 1;
}

Real r_of_x(const Real& x, const Real& lambda) {
    if (x <= -1 || x >= 1) throw DomainError("r_of_x: x must lie in (-1, 1)");
    return atanh(sqrt((x + 1) / 2)) / lambda;
}

Real v_of_x(const Real& x, const PotentialParams& p) {
    if (x <= -1 || x >= 1) throw DomainError("v_of_x: x must lie in (-1, 1)");
    const Real om = x + 1;   // omega
    const Real ph = x - 1;   // phi
    return -(ph / om) * (p.v0 + p.v1 * om / 2 + p.v2 * om * om / 4);
}

std::vector<Real> pt_exact_spectrum(const PotentialParams& p) {
    validate_params(p);
    if (p.v2 != 0) throw UnsupportedParams("closed-form spectrum requires V2 = 0");
    if (p.ell != 0) throw UnsupportedParams("closed-form spectrum requires ell = 0");
    const Real l2 = p.lambda * p.lambda;
    const Real arg_a = Real(1) / 4 + 2 * p.v0 / l2;
    const Real arg_b = Real(1) / 4 - 2 * p.v1 / l2;
    if (arg_a < 0 || arg_b < 0)
        throw UnsupportedParams("closed-form spectrum: square-root argument negative");
    const Real a = sqrt(arg_a);
    const Real b = sqrt(arg_b);
    // Highest level: largest integer n with 2n + 1 + a - b < 0.
    const long n_max = static_cast<long>(floor((b - a - 1) / 2).convert_to<long>());
    std::vector<Real> out;
    for (long n = 0; n <= n_max; ++n) {
        const Real base = 2 * n + 1 + a - b;
        const Real e = -l2 / 2 * base * base;
        if (e < 0) out.push_back(e);
    }
    return out;
}

namespace {

// Central-difference derivative sign at r with a relative step small enough
// that only the true slope matters at working precision.
int slope_sign(const Real& r, const PotentialParams& p) {
    const Real d = r * Real("1e-12");
    const Real g = v_of_r(r + d, p) - v_of_r(r - d, p);
    if (g > 0) return 1;
    if (g < 0) return -1;
    return 0;
}

Real bisect_extremum(Real lo, Real hi, const PotentialParams& p) {
    const int slo = slope_sign(lo, p);
    for (int it = 0; it < 200 && (hi - lo) > Real("1e-6") * hi; ++it) {
        const Real mid = (lo + hi) / 2;
        if (slope_sign(mid, p) == slo) lo = mid; else hi = mid;
    }
    return (lo + hi) / 2;
}

// Golden-section polish of a minimum inside [lo, hi], 1e-12 relative.
Real golden_min(Real lo, Real hi, const PotentialParams& p) {
    const Real gr = (sqrt(Real(5)) - 1) / 2;
    Real a = lo, b = hi;
    Real c = b - gr * (b - a);
    Real d = a + gr * (b - a);
    Real fc = v_of_r(c, p), fd = v_of_r(d, p);
    for (int it = 0; it < 400 && (b - a) > Real("1e-12") * (abs(a) + abs(b)); ++it) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = v_of_r(c, p);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = v_of_r(d, p);
        }
    }
    return (a + b) / 2;
}

}  // namespace

PotentialShape classify_potential(const PotentialParams& p) {
    validate_params(p);
    // Log-spaced scan over (1e-4/lambda, 30/lambda); potential features live
    // at lambda*r of order one.
    const int n_scan = 4000;
    const Real r_lo = Real("1e-4") / p.lambda;
    const Real r_hi = Real(30) / p.lambda;
    const Real ratio = pow(r_hi / r_lo, Real(1) / (n_scan - 1));

    std::vector<Real> rs(n_scan), vs(n_scan);
    Real r = r_lo;
    for (int i = 0; i < n_scan; ++i, r *= ratio) {
        rs[i] = r;
        vs[i] = v_of_r(r, p);
    }

    PotentialShape shape;
    Real vmin_seen = vs[0];
    for (int i = 1; i < n_scan; ++i) if (vs[i] < vmin_seen) vmin_seen = vs[i];

    // Interior extrema from slope sign changes of consecutive secants.
    for (int i = 1; i + 1 < n_scan; ++i) {
        const bool rising_in = vs[i] > vs[i - 1];
        const bool rising_out = vs[i + 1] > vs[i];
        if (rising_in == rising_out) continue;
        const bool is_min = !rising_in && rising_out;
        // Bisection on the slope sign locates the extremum; minima get a
        // golden-section polish of V itself to 1e-12 relative.
        Real re = bisect_extremum(rs[i - 1], rs[i + 1], p);
        if (is_min) re = golden_min(rs[i - 1], rs[i + 1], p);
        const Real ve = v_of_r(re, p);
        shape.extrema.emplace_back(re, ve);
        if (ve < vmin_seen) vmin_seen = ve;
    }

    if (shape.extrema.size() >= 2) {
        shape.classification = ShapeClass::TwoExtrema;
    } else if (shape.extrema.size() == 1 &&
               vs[0] > shape.extrema[0].second && vs[n_scan - 1] > shape.extrema[0].second) {
        shape.classification = ShapeClass::SingleMinimum;
    } else {
        shape.classification = ShapeClass::InflectionOrMonotone;
    }
    if (vmin_seen < 0) shape.v_min = vmin_seen;
    return shape;
}

std::optional<Real> default_scan_floor(const PotentialParams& p) {
    const PotentialShape s = classify_potential(p);
    if (!s.v_min) return std::nullopt;
    return *s.v_min * Real("1.05");
}

}  // namespace aim
