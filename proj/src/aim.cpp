#include "aimbound/aim.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "aimbound/errors.hpp"

namespace aim {

void validate_settings(const AimSettings& s) {
    if (s.x0 <= -1 || s.x0 >= 1) throw ConfigError("x0 must lie in (-1, 1)");
    if (s.precision_digits < kMinPrecisionDigits)
        throw ConfigError("precision_digits must be at least " + std::to_string(kMinPrecisionDigits));
    if (!(s.e_max < 0)) throw ConfigError("e_max must be negative");
    if (s.e_min && !(*s.e_min < s.e_max)) throw ConfigError("e_min must be below e_max");
    if (s.k_stride < 1) throw ConfigError("k_stride must be positive");
    if (s.k_max < 2 * s.k_stride) throw ConfigError("k_max must be at least 2*k_stride");
    if (s.scan_points < 10) throw ConfigError("scan_points must be at least 10");
    if (!(s.root_tol > 0) || !(s.conv_tol > 0)) throw ConfigError("tolerances must be positive");
}

namespace {

// E-independent parts of the coefficient build. s0(E) = s0_base - E * s0_scale,
// so the per-energy cost inside scans is a single scaled subtraction.
struct Coefficients {
    Jet lam0;
    Jet s0_base;
    Jet s0_scale;
};

Coefficients build_cached(const PotentialParams& p, const Real& x0, int order) {
    const Jet x = jet_var(x0, order);
    const Jet om = jet_shift(x, Real(1));                  // omega = x + 1
    const Jet ph = jet_shift(x, Real(-1));                 // phi   = x - 1
    const Jet ch = jet_shift(jet_scale(x, Real(3)), Real(1));  // chi = 3x + 1

    Coefficients c;
    c.lam0 = jet_scale(jet_div(ch, jet_mul(ph, om)), Real(-1) / 2);

    // V(x) = -(phi/omega) [V0 + V1 omega/2 + V2 omega^2/4]
    Jet q = jet_shift(jet_add(jet_scale(om, p.v1 / 2), jet_scale(jet_square(om), p.v2 / 4)), p.v0);
    Jet vx = jet_scale(jet_mul(jet_div(ph, om), q), Real(-1));

    const Jet ph2om = jet_mul(jet_square(ph), om);
    const Real kin = p.mass / (p.hbar * p.hbar * p.lambda * p.lambda);
    c.s0_scale = jet_scale(jet_div(jet_const(Real(1), x0, order), ph2om), kin);
    c.s0_base = jet_scale(jet_div(vx, ph2om), kin);
    if (p.ell > 0) {
        // centrifugal part: ell(ell+1) / (2 phi^2 omega eta),
        // eta = arctanh^2(sqrt((x+1)/2)) = (lambda r)^2
        Jet eta = jet_square(jet_atanh(jet_sqrt(jet_scale(om, Real(1) / 2))));
        Jet lterm = jet_div(jet_const(Real(p.ell) * (p.ell + 1) / 2, x0, order),
                            jet_mul(ph2om, eta));
        c.s0_base = jet_add(c.s0_base, lterm);
    }
    return c;
}

inline int sign_of(const Real& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;  // zero or nan: treated as no usable sign
}

// Recurrence pass recording Delta at the requested depths (sorted ascending).
// The initial jets are truncated to the deepest requested k plus margin; the
// discarded orders cannot influence the recorded constant terms.
std::vector<std::pair<int, Real>> run_recurrence(const Coefficients& c, const Real& E,
                                                 const std::vector<int>& record_ks) {
    const int k_top = record_ks.back();
    const int ord = std::min(c.lam0.order(), k_top + 2);
    Jet lam = jet_truncate(c.lam0, ord);
    Jet s = jet_sub(jet_truncate(c.s0_base, ord), jet_scale(jet_truncate(c.s0_scale, ord), E));
    const Jet lam0 = lam;
    const Jet s0 = s;

    std::vector<std::pair<int, Real>> out;
    out.reserve(record_ks.size());
    std::size_t next = 0;
    Jet lam_prev, s_prev;
    for (int k = 1; k <= k_top; ++k) {
        const int L = lam.order();
        if (L < 1) throw OrderExhausted("series order spent before requested depth");
        Jet nl = jet_add(jet_add(jet_derivative(lam), jet_truncate(s, L - 1)),
                         jet_mul_to(lam0, lam, L - 1));
        Jet ns = jet_add(jet_derivative(s), jet_mul_to(s0, lam, L - 1));
        lam_prev = std::move(lam);
        s_prev = std::move(s);
        lam = std::move(nl);
        s = std::move(ns);
        if (next < record_ks.size() && record_ks[next] == k) {
            out.emplace_back(k, lam.c[0] * s_prev.c[0] - lam_prev.c[0] * s.c[0]);
            ++next;
        }
    }
    return out;
}

Real delta_at(const Coefficients& c, const Real& E, int k) {
    return run_recurrence(c, E, {k}).front().second;
}

// Bracketed root refinement: Illinois false position with a bisection step
// every fourth iteration. The sign-change bracket is preserved throughout, so
// oscillatory Delta cannot derail it; the interpolation only buys speed.
template <class F>
Real refine_root(F&& f, Real lo, Real hi, Real flo, Real fhi, const Real& tol) {
    int last_side = 0;
    for (int it = 0; it < 120 && (hi - lo) > tol; ++it) {
        Real xm;
        if (it % 4 == 3) {
            xm = (lo + hi) / 2;
        } else {
            xm = (lo * fhi - hi * flo) / (fhi - flo);
            if (!(xm > lo && xm < hi)) xm = (lo + hi) / 2;
        }
        const Real fm = f(xm);
        const int sm = sign_of(fm);
        if (sm == 0) return xm;
        if (sm == sign_of(flo)) {
            lo = xm;
            flo = fm;
            if (last_side < 0) fhi /= 2;
            last_side = -1;
        } else {
            hi = xm;
            fhi = fm;
            if (last_side > 0) flo /= 2;
            last_side = +1;
        }
    }
    return (lo + hi) / 2;
}

struct Track {
    Real e;
    Real drift;
    bool have_drift = false;
    int last_k = 0;
    int k_conv = 0;
    Real resid;
    bool frozen = false;
    bool lost = false;
};

}  // namespace

std::pair<Jet, Jet> build_coefficients(const PotentialParams& p, const AimSettings& st,
                                       const Real& E) {
    validate_params(p);
    if (st.x0 <= -1 || st.x0 >= 1) throw DomainError("x0 must lie in (-1, 1)");
    const Coefficients c = build_cached(p, st.x0, st.k_max + 4);
    Jet s0 = jet_sub(c.s0_base, jet_scale(c.s0_scale, E));
    return {c.lam0, std::move(s0)};
}

AimState aim_initial_state(const Jet& lam0, const Jet& s0) {
    AimState st;
    st.lam = lam0;
    st.s = s0;
    st.k = 0;
    return st;
}

AimState aim_iterate(const AimState& state, const Jet& lam0, const Jet& s0) {
    const int L = state.lam.order();
    if (L < 1) throw OrderExhausted("aim_iterate: series order spent");
    AimState next;
    next.lam = jet_add(jet_add(jet_derivative(state.lam), jet_truncate(state.s, L - 1)),
                       jet_mul_to(lam0, state.lam, L - 1));
    next.s = jet_add(jet_derivative(state.s), jet_mul_to(s0, state.lam, L - 1));
    next.lam_prev = state.lam;
    next.s_prev = state.s;
    next.k = state.k + 1;
    return next;
}

Real delta_k(const PotentialParams& p, const AimSettings& st, const Real& E, int k) {
    if (k < 1) throw ConfigError("delta_k: k must be at least 1");
    const int P = st.k_max + 4;
    if (k > P - 2) throw OrderExhausted("delta_k: k exceeds the series order budget");
    const Coefficients c = build_cached(p, st.x0, P);
    return delta_at(c, E, k);
}

std::vector<std::pair<int, Real>> delta_profile(const PotentialParams& p, const AimSettings& st,
                                                const Real& E) {
    validate_settings(st);
    const Coefficients c = build_cached(p, st.x0, st.k_max + 4);
    std::vector<int> ks;
    for (int k = st.k_stride; k <= st.k_max; k += st.k_stride) ks.push_back(k);
    if (ks.empty() || ks.back() != st.k_max) ks.push_back(st.k_max);
    return run_recurrence(c, E, ks);
}

std::vector<EigenResult> find_spectrum(const PotentialParams& p, const AimSettings& st) {
    validate_params(p);
    validate_settings(st);
    set_precision_digits(st.precision_digits);

    Real e_min;
    if (st.e_min) {
        e_min = *st.e_min;
    } else {
        const auto floor_e = default_scan_floor(p);
        if (!floor_e) throw NoRootsFound("potential has no negative well");
        e_min = *floor_e;
    }
    if (!(e_min < st.e_max)) throw ConfigError("e_min must be below e_max");

    const Coefficients coeffs = build_cached(p, st.x0, st.k_max + 4);

    std::vector<int> ks;
    for (int k = st.k_stride; k <= st.k_max; k += st.k_stride) ks.push_back(k);
    if (ks.back() != st.k_max) ks.push_back(st.k_max);

    const int np = st.scan_points;
    const Real step = (st.e_max - e_min) / (np - 1);
    std::vector<Real> grid(np);
    for (int i = 0; i < np; ++i) grid[i] = e_min + step * i;

    std::vector<Track> tracks;
    const Real huge = std::numeric_limits<double>::infinity();

    auto claim_of = [&](const Track& t) {
        Real c = step;
        if (t.have_drift && 3 * t.drift > c) c = 3 * t.drift;
        return c;
    };

    // Scan a contiguous index range of the energy grid at depth k and open a
    // track for every sign change found.
    auto scan_range = [&](int i_lo, int i_hi, int k) {
        if (i_hi - i_lo < 1) return;
        std::vector<Real> d(i_hi - i_lo + 1);
        for (int i = i_lo; i <= i_hi; ++i) d[i - i_lo] = delta_at(coeffs, grid[i], k);
        for (int i = i_lo; i < i_hi; ++i) {
            const int s1 = sign_of(d[i - i_lo]);
            const int s2 = sign_of(d[i + 1 - i_lo]);
            if (s1 == 0 || s2 == 0 || s1 == s2) continue;
            const Real root =
                refine_root([&](const Real& e) { return delta_at(coeffs, e, k); },
                            grid[i], grid[i + 1], d[i - i_lo], d[i + 1 - i_lo], st.root_tol);
            Track t;
            t.e = root;
            t.last_k = k;
            t.resid = huge;
            t.drift = huge;
            tracks.push_back(std::move(t));
        }
        std::sort(tracks.begin(), tracks.end(),
                  [](const Track& a, const Track& b) { return a.e < b.e; });
    };

    // March one track to depth k inside a warm window; returns false when the
    // sign change is gone from the window (root lost at this depth).
    auto march = [&](Track& t, int k, const Real& w_cap) {
        Real w = t.have_drift ? 8 * t.drift + Real("1e-3") : step;
        if (w > w_cap) w = w_cap;
        auto eval = [&](const Real& e) { return delta_at(coeffs, e, k); };
        for (int attempt = 0; attempt < 2; ++attempt) {
            Real lo = t.e - w;
            Real hi = t.e + w;
            if (lo < e_min) lo = e_min;
            if (hi > st.e_max) hi = st.e_max;
            const int pieces = attempt == 0 ? 8 : 16;
            const Real h = (hi - lo) / pieces;
            Real prev_e = lo;
            Real prev_d = eval(lo);
            for (int j = 1; j <= pieces; ++j) {
                const Real cur_e = j == pieces ? hi : lo + h * j;
                const Real cur_d = eval(cur_e);
                const int s1 = sign_of(prev_d);
                const int s2 = sign_of(cur_d);
                if (s1 != 0 && s2 != 0 && s1 != s2) {
                    const Real root = refine_root(eval, prev_e, cur_e, prev_d, cur_d, st.root_tol);
                    const Real drift = abs(root - t.e);
                    t.e = root;
                    t.drift = drift;
                    t.have_drift = true;
                    t.last_k = k;
                    t.lost = false;
                    if (drift < st.conv_tol) {
                        t.frozen = true;
                        t.k_conv = k;
                        t.resid = drift;
                    }
                    return true;
                }
                prev_e = cur_e;
                prev_d = cur_d;
            }
            const Real w_next = 3 * w < w_cap ? 3 * w : w_cap;
            if (w_next <= w) break;
            w = w_next;
        }
        return false;
    };

    // Initial scan at the first depth, then per-stride tracking plus a spawn
    // scan of the unclaimed window above the shallowest live root, where new
    // (near-threshold) roots surface as the depth grows.
    scan_range(0, np - 1, ks[0]);

    for (std::size_t si = 1; si < ks.size(); ++si) {
        const int k = ks[si];

        for (std::size_t ti = 0; ti < tracks.size(); ++ti) {
            Track& t = tracks[ti];
            if (t.frozen) continue;
            Real gap = st.e_max - e_min;
            if (ti > 0 && t.e - tracks[ti - 1].e < gap) gap = t.e - tracks[ti - 1].e;
            if (ti + 1 < tracks.size() && tracks[ti + 1].e - t.e < gap)
                gap = tracks[ti + 1].e - t.e;
            const Real w_cap = gap * Real("0.45");
            if (!march(t, k, w_cap)) t.lost = true;
        }

        // Shallow depths rescan everything (cheap, and the root complement is
        // still filling in); deeper ones only the unclaimed top of the window.
        int spawn_from = 0;
        if (k > 40) {
            for (std::size_t ti = 0; ti < tracks.size(); ++ti) {
                if (tracks[ti].lost) continue;
                const Real edge = tracks[ti].e + claim_of(tracks[ti]);
                while (spawn_from < np && grid[spawn_from] <= edge) ++spawn_from;
            }
            if (spawn_from > 0) --spawn_from;  // one grid point of overlap at the seam
        }
        scan_range(spawn_from, np - 1, k);

        // Merge tracks that collapsed onto (or were re-discovered at) the same
        // root, preferring the copy with the longer history.
        std::sort(tracks.begin(), tracks.end(),
                  [](const Track& a, const Track& b) { return a.e < b.e; });
        auto history = [](const Track& t) {
            return (t.frozen ? 4 : 0) + (t.have_drift ? 2 : 0) + (t.lost ? 0 : 1);
        };
        for (std::size_t ti = 1; ti < tracks.size();) {
            if (abs(tracks[ti].e - tracks[ti - 1].e) < 10 * st.root_tol) {
                const std::size_t drop =
                    history(tracks[ti]) <= history(tracks[ti - 1]) ? ti : ti - 1;
                tracks.erase(tracks.begin() + drop);
            } else {
                ++ti;
            }
        }
        // A lost track sitting next to a live one is the same root re-found by
        // a rescan; drop the stale copy.
        for (std::size_t ti = 0; ti < tracks.size();) {
            bool stale = false;
            if (tracks[ti].lost) {
                for (const Track& o : tracks) {
                    if (!o.lost && abs(o.e - tracks[ti].e) < step * Real("1.5")) {
                        stale = true;
                        break;
                    }
                }
            }
            if (stale) tracks.erase(tracks.begin() + ti); else ++ti;
        }
    }

    std::vector<EigenResult> out;
    out.reserve(tracks.size());
    for (const Track& t : tracks) {
        // A sign change seen at one depth and never re-found after a single
        // march is scan noise from the oscillatory shallow-depth profile, not
        // a lost eigenvalue track.
        if (t.lost && !t.have_drift) continue;
        EigenResult r;
        r.energy = t.e;
        if (t.frozen) {
            r.status = RootStatus::Converged;
            r.k_converged = t.k_conv;
            r.residual = t.resid;
        } else if (t.lost) {
            r.status = RootStatus::LostRoot;
            r.k_converged = t.last_k;
            r.residual = t.have_drift ? t.drift : Real(huge);
        } else {
            r.status = RootStatus::MaxIterations;
            r.k_converged = t.last_k;
            r.residual = t.have_drift ? t.drift : Real(huge);
        }
        out.push_back(std::move(r));
    }
    if (out.empty()) throw NoRootsFound("no sign change of the termination function at any depth");
    std::sort(out.begin(), out.end(),
              [](const EigenResult& a, const EigenResult& b) { return a.energy < b.energy; });
    // Level indices count real levels only; stale positions are marked out.
    int n = 0;
    for (EigenResult& r : out) r.n = r.status == RootStatus::LostRoot ? -1 : n++;
    return out;
}

}  // namespace aim
