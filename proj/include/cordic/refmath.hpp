// SPDX-License-Identifier: MIT
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cordic {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Dense univariate polynomial with exact rational coefficients,
// coefficients[i] multiplying x^i. Trailing zeros are normalized away.
struct RationalPoly {
    std::vector<Rational> coefficients;

    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> c) : coefficients(std::move(c)) { normalize(); }

    void normalize() {
        while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
    }

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }  // -1 for zero poly

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coefficients.size())) return Rational(0);
        return coefficients[i];
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        return a.coefficients == b.coefficients;
    }
};

inline RationalPoly add(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.coefficients.size(), b.coefficients.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return RationalPoly(std::move(c));
}

// Product with all terms of degree > order discarded (exact truncated ring).
inline RationalPoly multiply_truncate(const RationalPoly& a, const RationalPoly& b, int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    for (size_t i = 0; i < a.coefficients.size() && static_cast<int>(i) <= order; ++i) {
        if (a.coefficients[i] == 0) continue;
        for (size_t j = 0; j < b.coefficients.size() && static_cast<int>(i + j) <= order; ++j)
            c[i + j] += a.coefficients[i] * b.coefficients[j];
    }
    return RationalPoly(std::move(c));
}

enum class SeriesFn { Sin, Cos, Arctan };

// Maclaurin polynomial of sin / cos / arctan truncated at the given degree,
// with exact rational coefficients.
inline RationalPoly taylor_series(SeriesFn f, int order) {
    if (order < 0) throw std::invalid_argument("taylor_series: order must be >= 0");
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    switch (f) {
        case SeriesFn::Sin: {
            BigInt fact = 1;  // (2n+1)!
            for (int n = 0, d = 1; d <= order; ++n, d += 2) {
                if (n > 0) fact *= BigInt(d - 1) * d;
                c[d] = Rational(((n % 2) ? -1 : 1), fact);
            }
            break;
        }
        case SeriesFn::Cos: {
            BigInt fact = 1;  // (2n)!
            for (int n = 0, d = 0; d <= order; ++n, d += 2) {
                if (n > 0) fact *= BigInt(d - 1) * d;
                c[d] = Rational(((n % 2) ? -1 : 1), fact);
            }
            break;
        }
        case SeriesFn::Arctan: {
            for (int n = 0, d = 1; d <= order; ++n, d += 2)
                c[d] = Rational(((n % 2) ? -1 : 1), d);
            break;
        }
    }
    return RationalPoly(std::move(c));
}

// Substitute `inner` into `outer`, expand exactly, and drop every term of
// degree > order. `inner` must have a zero constant term, otherwise the
// truncation-order bookkeeping below would be invalid.
inline RationalPoly compose_truncate(const RationalPoly& outer, const RationalPoly& inner, int order) {
    if (inner.coeff(0) != 0)
        throw std::invalid_argument("compose_truncate: inner polynomial must have zero constant term");
    // Horner in the truncated polynomial ring.
    RationalPoly acc;
    for (int i = outer.degree(); i >= 0; --i) {
        acc = multiply_truncate(acc, inner, order);
        acc = add(acc, RationalPoly({outer.coeff(i)}));
    }
    return acc;
}

// Full-double-precision reference from the platform's transcendental routines.
inline std::pair<double, double> reference_sincos(double theta) {
    return {std::cos(theta), std::sin(theta)};
}

// Accumulated magnitude gain of n conventional micro-rotations:
// K(n) = prod_{k=0}^{n-1} 1/sqrt(1 + 2^-2k)  (~0.60725 for large n).
// Computed in long double: consecutive values for k near 30 differ by less
// than a double ulp, and strict monotonicity is part of the contract.
inline long double scale_factor(int n) {
    if (n < 1) throw std::invalid_argument("scale_factor: n must be >= 1");
    long double prod = 1.0L;
    for (int k = 0; k < n; ++k) prod /= sqrtl(1.0L + ldexpl(1.0L, -2 * k));
    return prod;
}

// Plain 2x2 real matrix; `rotation` builds the exact rotation matrix
// (c, -s; s, c) used to verify the angle-addition identity numerically.
struct RotationMatrix2 {
    double a = 1, b = 0, c = 0, d = 1;  // row-major: [a b; c d]

    static RotationMatrix2 rotation(double theta) {
        double cs = std::cos(theta), sn = std::sin(theta);
        return {cs, -sn, sn, cs};
    }

    double determinant() const { return a * d - b * c; }

    friend RotationMatrix2 operator*(const RotationMatrix2& m, const RotationMatrix2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
};

}  // namespace cordic
