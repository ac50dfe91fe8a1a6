#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

namespace cmdbell {

/// Exact arbitrary-precision rational. Kernel dimensions, the feasibility
/// solver and the exact-mode model operations run on this type; everything
/// statistical runs on double.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    if (x == 0.0)
        return Rational(0);
    int exp = 0;
    // 53 bits of mantissa; frexp yields x = m * 2^exp with 0.5 <= |m| < 1.
    const double m = std::frexp(x, &exp);
    const auto mantissa = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mantissa);
    if (exp >= 0)
        r *= Rational(BigInt(1) << exp);
    else
        r /= Rational(BigInt(1) << -exp);
    return r;
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

} // namespace cmdbell
