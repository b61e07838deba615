// SPDX-License-Identifier: MIT
#pragma once

#include <cordic/fixedpoint.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cordic {

namespace detail {
// Table of arctan(2^-k) in double, k = 0..63 (indices past 31 only feed
// high-precision residual bookkeeping in tests).
inline double atan_pow2(int k) {
    static const auto table = [] {
        std::vector<double> t(64);
        for (int i = 0; i < 64; ++i) t[i] = std::atan(std::ldexp(1.0, -i));
        return t;
    }();
    return table[static_cast<size_t>(k)];
}

// floor(sqrt(2) * 2^62); shifting this right yields floor(sqrt(2) * 2^j)
// exactly for any j <= 62, since sqrt(2) * 2^j is irrational.
inline constexpr uint64_t sqrt2_q62 = 0x5A827999FCEF3242ull;
}  // namespace detail

// Index of the micro-rotation angle arctan(2^-k) closest to |theta|:
// k = Round(log2(1 / |theta|)), rounded half away from zero, clamped to the
// ROM's index range [0, 31].
inline int closest_index(double theta) {
    double mag = std::fabs(theta);
    if (mag == 0.0) throw std::domain_error("closest_index: zero angle has no closest index");
    double x = std::log2(1.0 / mag);
    double rounded = (x >= 0) ? std::floor(x + 0.5) : -std::floor(-x + 0.5);
    if (rounded < 0) return 0;
    if (rounded > 31) return 31;
    return static_cast<int>(rounded);
}

// Same selection on a raw Q2.30 magnitude, in pure integer logic: detect the
// leading fraction bit (position i, weight 2^-i), then compare against the
// midpoint threshold ceil(sqrt(2) * 2^-i scaled to raw units) to decide
// between k = i and k = i - 1. Agrees with closest_index by construction; a
// "next bit set" test alone would put the boundary at 1.5 * 2^-i instead of
// the logarithmic midpoint sqrt(2) * 2^-i and misclassify values between
// the two.
inline int closest_index_bits(Q30Fixed magnitude) {
    if (magnitude.raw <= 0)
        throw std::domain_error("closest_index_bits: magnitude must be positive");
    auto r = static_cast<uint32_t>(magnitude.raw);
    int width = std::bit_width(r);       // r in [2^(width-1), 2^width)
    int i = 31 - width;                  // value in [2^-i, 2^-(i-1)), i in [0, 30]
    // k = i - 1 iff value > sqrt(2) * 2^-i, i.e. raw >= floor(sqrt2 * 2^(30-i)) + 1.
    uint64_t threshold = (detail::sqrt2_q62 >> (32 + i)) + 1;
    int k = (r >= threshold) ? i - 1 : i;
    return k < 0 ? 0 : k;
}

// One signed greedy step: which elementary angle, with which direction.
struct DecompositionStep {
    int k;
    int sign;  // +1 or -1
};

struct Decomposition {
    std::vector<DecompositionStep> steps;
    double residual = 0;
};

// Greedy decomposition of theta into signed elementary angles
// +-arctan(2^-k): repeatedly subtract the closest elementary angle from the
// residual. Runs exactly max_steps steps unless the residual reaches
// stop_tolerance first (default 0: fixed step count, mirroring the
// fixed-iteration hardware loop).
inline Decomposition decompose(double theta, int max_steps, double stop_tolerance = 0.0) {
    if (max_steps < 1) throw std::invalid_argument("decompose: max_steps must be >= 1");
    Decomposition d;
    d.residual = theta;
    while (static_cast<int>(d.steps.size()) < max_steps && std::fabs(d.residual) > stop_tolerance) {
        int k = closest_index(d.residual);
        int sign = (d.residual > 0) ? +1 : -1;
        d.steps.push_back({k, sign});
        d.residual -= sign * detail::atan_pow2(k);
    }
    return d;
}

}  // namespace cordic
