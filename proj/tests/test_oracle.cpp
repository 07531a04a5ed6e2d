#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "aimbound/oracle.hpp"
#include "aimbound/potential.hpp"

using namespace aim;

int main(int argc, char** argv) {
    set_precision_digits(60);
    return doctest::Context(argc, argv).run();
}

namespace {

PotentialParams params(double v0, double v1, double v2, int ell = 0) {
    PotentialParams p;
    p.v0 = v0;
    p.v1 = v1;
    p.v2 = v2;
    p.ell = ell;
    return p;
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("tiny closed-form matrices") {
    {
        TridiagonalOperator op;
        op.diag = {2.0, 2.0};
        op.offdiag = {-1.0};
        const auto e = eigen_bisect(op, 2);
        REQUIRE(e.size() == 2);
        CHECK(std::abs(e[0] - 1.0) < 1e-9);
        CHECK(std::abs(e[1] - 3.0) < 1e-9);
    }
    {
        TridiagonalOperator op;
        op.diag = {5.0};
        op.offdiag = {};
        const auto e = eigen_bisect(op, 1);
        REQUIRE(e.size() == 1);
        CHECK(std::abs(e[0] - 5.0) < 1e-9);
    }
}

TEST_CASE("discretized box matches the closed form") {
    // Zero potential on [1, 2] is a unit box; the discrete eigenvalues of the
    // three-point scheme are (2/h^2) sin^2(k pi / (2(m+1))) exactly.
    const PotentialParams p = params(0, 0, 0);
    OracleGrid g;
    g.r_min = 1.0;
    g.r_max = 2.0;
    g.n_points = 201;
    const TridiagonalOperator op = discretize(p, g);
    const int m = static_cast<int>(op.diag.size());
    CHECK(m == 199);
    CHECK(static_cast<int>(op.offdiag.size()) == m - 1);
    const double h = 1.0 / 200.0;
    const auto e = eigen_bisect(op, 5);
    for (int k = 1; k <= 5; ++k) {
        const double s = std::sin(k * kPi / (2.0 * (m + 1)));
        CHECK(std::abs(e[k - 1] - 2.0 * s * s / (h * h)) < 1e-8);
    }
}

TEST_CASE("box error shrinks at second order") {
    const PotentialParams p = params(0, 0, 0);
    const double exact = kPi * kPi / 2.0;
    double err[2];
    const int npts[2] = {201, 401};
    for (int i = 0; i < 2; ++i) {
        OracleGrid g;
        g.r_min = 1.0;
        g.r_max = 2.0;
        g.n_points = npts[i];
        err[i] = std::abs(eigen_bisect(discretize(p, g), 1)[0] - exact);
    }
    CHECK(err[0] / err[1] > 3.5);
    CHECK(err[0] / err[1] < 4.5);
}

TEST_CASE("diagonal carries the effective potential") {
    const PotentialParams p = params(1, -50, 2, 1);
    OracleGrid g;
    g.r_min = 0.5;
    g.r_max = 1.5;
    g.n_points = 101;
    const TridiagonalOperator op = discretize(p, g);
    const double h = 0.01;
    const double r1 = 0.51;  // first interior node
    const double expect = 1.0 / (h * h) + dbl(v_of_r(Real(r1), p)) + 1.0 / (r1 * r1);
    CHECK(std::abs(op.diag[0] - expect) < 1e-9 * std::abs(expect));
    CHECK(std::abs(op.offdiag[0] + 0.5 / (h * h)) < 1e-12);
}

TEST_CASE("trace, norm and interlacing on random matrices") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dd(-5.0, 5.0);
    std::uniform_real_distribution<double> de(0.1, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        TridiagonalOperator op;
        const int m = 12;
        for (int i = 0; i < m; ++i) op.diag.push_back(dd(rng));
        for (int i = 0; i < m - 1; ++i) op.offdiag.push_back(de(rng));
        const auto full = eigen_bisect(op, m);
        REQUIRE(static_cast<int>(full.size()) == m);
        double trace = 0, frob = 0;
        for (double d : op.diag) trace += d, frob += d * d;
        for (double e : op.offdiag) frob += 2 * e * e;
        double sum = 0, sum2 = 0;
        for (double e : full) sum += e, sum2 += e * e;
        CHECK(std::abs(sum - trace) < 1e-6);
        CHECK(std::abs(sum2 - frob) < 1e-5 * (1 + frob));
        for (int i = 1; i < m; ++i) CHECK(full[i - 1] <= full[i]);

        // Cauchy interlacing against the leading principal minor
        TridiagonalOperator minor = op;
        minor.diag.pop_back();
        minor.offdiag.pop_back();
        const auto sub = eigen_bisect(minor, m - 1);
        for (int i = 0; i < m - 1; ++i) {
            CHECK(full[i] <= sub[i] + 1e-8);
            CHECK(sub[i] <= full[i + 1] + 1e-8);
        }
    }
}

TEST_CASE("counts agree with returned eigenvalues at random shifts") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dd(-5.0, 5.0);
    std::uniform_real_distribution<double> de(0.1, 2.0);
    TridiagonalOperator op;
    const int m = 15;
    for (int i = 0; i < m; ++i) op.diag.push_back(dd(rng));
    for (int i = 0; i < m - 1; ++i) op.offdiag.push_back(de(rng));
    const auto e = eigen_bisect(op, m);
    std::uniform_real_distribution<double> ds(-12.0, 12.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double sigma = ds(rng);
        int below = 0;
        for (double v : e)
            if (v < sigma) ++below;
        CHECK(sturm_count_below(op, sigma) == below);
    }
}

TEST_CASE("solvable well against the closed-form spectrum") {
    const PotentialParams p = params(1, -50, 0);
    const auto res = oracle_spectrum(p, default_grid(p), 16);
    CHECK(!res.grid_too_coarse);
    REQUIRE(res.levels.size() == 4);
    const double exact[4] = {-28.21876950687, -15.19378511237, -6.16880071787, -1.14381632337};
    for (int n = 0; n < 4; ++n) CHECK(std::abs(res.levels[n] - exact[n]) < 1e-5);
}

TEST_CASE("inner wall placement does not matter for a repulsive core") {
    const PotentialParams p = params(1, -50, 2);
    OracleGrid a = default_grid(p);
    OracleGrid b = a;
    b.r_min *= 0.5;
    const auto ra = oracle_spectrum(p, a, 8);
    const auto rb = oracle_spectrum(p, b, 8);
    REQUIRE(ra.levels.size() == rb.levels.size());
    for (size_t i = 0; i < ra.levels.size(); ++i)
        CHECK(std::abs(ra.levels[i] - rb.levels[i]) < 1e-6);
}

TEST_CASE("shallow well has no bound state") {
    const PotentialParams p = params(1, -2.5, 0);
    const auto res = oracle_spectrum(p, default_grid(p), 8);
    CHECK(res.levels.empty());
}

TEST_CASE("coarse grid is flagged") {
    const PotentialParams p = params(1, -50, 2);
    OracleGrid g = default_grid(p);
    g.n_points = 120;
    const auto res = oracle_spectrum(p, g, 4);
    CHECK(res.grid_too_coarse);
}

TEST_CASE("default grid scales with the range parameter") {
    PotentialParams p = params(1, -50, 0);
    p.lambda = 2;
    const OracleGrid g = default_grid(p);
    CHECK(std::abs(g.r_min - 5e-4) < 1e-12);
    CHECK(std::abs(g.r_max - 15.0) < 1e-12);
    CHECK(g.n_points == 20000);
}
