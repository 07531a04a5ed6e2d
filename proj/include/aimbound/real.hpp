#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace aim {

// Arbitrary-precision real with runtime-selectable precision. All arithmetic
// between two operands runs at the larger of their precisions (mpfr backend).
using Real = boost::multiprecision::mpfr_float;

// Process-wide working precision in decimal digits. Must be called before
// constructing the values that are meant to carry that precision.
inline void set_precision_digits(unsigned digits) {
    Real::default_precision(digits);
}

inline unsigned precision_digits() {
    return Real::default_precision();
}

inline double dbl(const Real& x) {
    return x.convert_to<double>();
}

// Minimum accepted working precision, in decimal digits (64 bits ~ 19 digits,
// rounded up to a round number that still exceeds double).
inline constexpr unsigned kMinPrecisionDigits = 20;

}  // namespace aim
