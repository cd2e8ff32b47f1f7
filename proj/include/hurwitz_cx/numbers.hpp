#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hurwitz_cx {

// All counts are exact; they outgrow 64 bits quickly once b and d do.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal_string(const Int& v) { return v.str(); }

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// x^n with the 0^0 = 1 convention.
inline Int int_pow(const Int& x, int n) {
    Int r = 1;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace hurwitz_cx
