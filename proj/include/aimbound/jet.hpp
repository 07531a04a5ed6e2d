#pragma once

#include <vector>

#include "aimbound/real.hpp"

namespace aim {

// Truncated Taylor series of a function at a fixed expansion point x0:
// c[j] = f^(j)(x0) / j!. Order P means P+1 stored coefficients. Jets are
// immutable values; every operation returns a fresh jet.
struct Jet {
    std::vector<Real> c;
    Real x0;

    int order() const { return static_cast<int>(c.size()) - 1; }
    const Real& constant_term() const { return c.front(); }
};

// Constructors.
Jet jet_const(const Real& value, const Real& x0, int order);
// The identity function x, expanded at x0: [x0, 1, 0, ...].
Jet jet_var(const Real& x0, int order);

// Binary arithmetic. Both operands must share x0 and order.
Jet jet_add(const Jet& a, const Jet& b);
Jet jet_sub(const Jet& a, const Jet& b);
Jet jet_mul(const Jet& a, const Jet& b);   // truncated Cauchy product
Jet jet_div(const Jet& a, const Jet& b);   // series quotient
Jet jet_scale(const Jet& a, const Real& f);
Jet jet_shift(const Jet& a, const Real& f); // a + constant

// Composed functions needed by the coefficient build: sqrt, arctanh, square.
Jet jet_sqrt(const Jet& a);    // requires a.c[0] > 0
Jet jet_atanh(const Jet& a);   // requires |a.c[0]| < 1
Jet jet_square(const Jet& a);

// d/dx, one order lower. Throws OrderExhausted at order 0.
Jet jet_derivative(const Jet& a);

// First new_order+1 coefficients, new_order <= order.
Jet jet_truncate(const Jet& a, int new_order);

// Truncated product of the leading out_order+1 coefficients only; operands may
// be longer than the result. Used by the iteration loop where the working
// order shrinks by one per step.
Jet jet_mul_to(const Jet& a, const Jet& b, int out_order);

}  // namespace aim
