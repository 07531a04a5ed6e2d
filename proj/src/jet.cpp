#include "aimbound/jet.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include "aimbound/errors.hpp"

namespace aim {

namespace {

void check_binary(const Jet& a, const Jet& b, const char* what) {
    if (a.order() != b.order())
        throw OrderMismatch(std::string(what) + ": jet orders differ (" +
                            std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
    if (a.x0 != b.x0)
        throw OrderMismatch(std::string(what) + ": jets expanded at different points");
}

}  // namespace

Jet jet_const(const Real& value, const Real& x0, int order) {
    Jet j;
    j.x0 = x0;
    j.c.assign(order + 1, Real(0));
    j.c[0] = value;
    return j;
}

Jet jet_var(const Real& x0, int order) {
    Jet j = jet_const(x0, x0, order);
    if (order >= 1) j.c[1] = 1;
    return j;
}

Jet jet_add(const Jet& a, const Jet& b) {
    check_binary(a, b, "add");
    Jet r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

Jet jet_sub(const Jet& a, const Jet& b) {
    check_binary(a, b, "sub");
    Jet r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

Jet jet_mul(const Jet& a, const Jet& b) {
    check_binary(a, b, "mul");
    return jet_mul_to(a, b, a.order());
}

Jet jet_mul_to(const Jet& a, const Jet& b, int out_order) {
    Jet r;
    r.x0 = a.x0;
    r.c.assign(out_order + 1, Real(0));
    const int na = a.order();
    const int nb = b.order();
    for (int k = 0; k <= out_order; ++k) {
        Real acc(0);
        const int jlo = k - nb > 0 ? k - nb : 0;
        const int jhi = k < na ? k : na;
        for (int j = jlo; j <= jhi; ++j) acc += a.c[j] * b.c[k - j];
        r.c[k] = acc;
    }
    return r;
}

Jet jet_div(const Jet& a, const Jet& b) {
    check_binary(a, b, "div");
    if (b.c[0] == 0)
        throw DivisionByZeroConstantTerm("div: divisor jet has zero constant term");
    Jet q;
    q.x0 = a.x0;
    const int n = a.order();
    q.c.assign(n + 1, Real(0));
    for (int k = 0; k <= n; ++k) {
        Real acc = a.c[k];
        for (int j = 1; j <= k; ++j) acc -= b.c[j] * q.c[k - j];
        q.c[k] = acc / b.c[0];
    }
    return q;
}

Jet jet_scale(const Jet& a, const Real& f) {
    Jet r = a;
    for (auto& ci : r.c) ci *= f;
    return r;
}

Jet jet_shift(const Jet& a, const Real& f) {
    Jet r = a;
    r.c[0] += f;
    return r;
}

Jet jet_sqrt(const Jet& a) {
    if (a.c[0] <= 0)
        throw DomainError("sqrt: jet constant term must be positive");
    // g = sqrt(a) from 2*g*g' = a', coefficient by coefficient:
    // g_k = (a_k - sum_{j=1..k-1} g_j g_{k-j}) / (2 g_0).
    Jet g;
    g.x0 = a.x0;
    const int n = a.order();
    g.c.assign(n + 1, Real(0));
    g.c[0] = sqrt(a.c[0]);
    const Real two_g0 = 2 * g.c[0];
    for (int k = 1; k <= n; ++k) {
        Real acc = a.c[k];
        for (int j = 1; j <= k - 1; ++j) acc -= g.c[j] * g.c[k - j];
        g.c[k] = acc / two_g0;
    }
    return g;
}

Jet jet_atanh(const Jet& a) {
    if (abs(a.c[0]) >= 1)
        throw DomainError("arctanh: jet constant term must lie in (-1, 1)");
    const int n = a.order();
    Jet g;
    g.x0 = a.x0;
    g.c.assign(n + 1, Real(0));
    g.c[0] = atanh(a.c[0]);
    if (n == 0) return g;
    // g' = a' / (1 - a^2); integrate the quotient series termwise.
    Jet denom = jet_shift(jet_scale(jet_truncate(jet_square(a), n - 1), Real(-1)), Real(1));
    Jet w = jet_div(jet_derivative(a), denom);
    for (int k = 1; k <= n; ++k) g.c[k] = w.c[k - 1] / k;
    return g;
}

Jet jet_square(const Jet& a) { return jet_mul_to(a, a, a.order()); }

Jet jet_derivative(const Jet& a) {
    if (a.order() < 1)
        throw OrderExhausted("derivative: jet order is spent");
    Jet d;
    d.x0 = a.x0;
    const int n = a.order();
    d.c.assign(n, Real(0));
    for (int j = 0; j < n; ++j) d.c[j] = (j + 1) * a.c[j + 1];
    return d;
}

Jet jet_truncate(const Jet& a, int new_order) {
    if (new_order > a.order())
        throw OrderMismatch("truncate: requested order exceeds jet order");
    Jet r;
    r.x0 = a.x0;
    r.c.assign(a.c.begin(), a.c.begin() + new_order + 1);
    return r;
}

}  // namespace aim
