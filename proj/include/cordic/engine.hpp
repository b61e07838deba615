// SPDX-License-Identifier: MIT
#pragma once

#include <cordic/refmath.hpp>
#include <cordic/selector.hpp>
#include <cordic/variants.hpp>

#include <cmath>
#include <stdexcept>

namespace cordic {

// The (x, y, z) triple threaded through rotation-mode iterations.
struct CordicState {
    double x = 1, y = 0, z = 0;
};

struct EngineResult {
    double cos_est = 1;
    double sin_est = 0;
    double residual = 0;  // final z
};

// Conventional rotation-mode CORDIC on circular trajectories: fixed schedule
// k = 0 .. n-1, exact tangents 2^-k, final compensation by the scale constant
// K(n). A zero residual keeps rotating with epsilon = +1 (standard practice;
// the alternating +-arctan(2^-k) steps cancel).
inline EngineResult run_conventional(double theta, int iterations) {
    if (iterations < 1 || iterations > 32)
        throw std::invalid_argument("run_conventional: iterations must lie in [1, 32]");
    if (!(std::fabs(theta) <= 0.7853981633974484))
        throw std::domain_error("run_conventional: |theta| must be <= pi/4");
    CordicState st{1.0, 0.0, theta};
    for (int k = 0; k < iterations; ++k) {
        double eps = (st.z >= 0) ? 1.0 : -1.0;
        double t = std::ldexp(1.0, -k);
        double x = st.x - eps * t * st.y;
        double y = eps * t * st.x + st.y;
        st.x = x;
        st.y = y;
        st.z -= eps * detail::atan_pow2(k);
    }
    auto K = static_cast<double>(scale_factor(iterations));
    return {K * st.x, K * st.y, st.z};
}

// Scale-free CORDIC: each step picks the elementary angle closest to the
// residual (dynamic schedule, repetition allowed) and applies the variant's
// polynomial-approximated rotation matrix; no compensation multiply.
//
// The index is clamped to k >= 1 in this rotation path: the coefficient
// polynomials are truncated series in x = 2^-k and lose their accuracy
// budget entirely at x = 1, so the k = 0 entry is valid for angle
// bookkeeping (selector/decompose) but not for the x/y update. A k = 1
// rotation step still contracts any residual in (sqrt(2)/2, pi/4].
inline EngineResult run_scalefree(double theta, int iterations, Variant variant) {
    if (variant == Variant::Conventional)
        throw std::invalid_argument("run_scalefree: use run_conventional for this scheme");
    if (iterations < 1 || iterations > 16)
        throw std::invalid_argument("run_scalefree: iterations must lie in [1, 16]");
    if (!(std::fabs(theta) <= 0.7853981633974484))
        throw std::domain_error("run_scalefree: |theta| must be <= pi/4");
    CordicState st{1.0, 0.0, theta};
    for (int i = 0; i < iterations; ++i) {
        if (st.z == 0.0) continue;  // nothing left to rotate
        int k = closest_index(st.z);
        if (k < 1) k = 1;
        double eps = (st.z > 0) ? 1.0 : -1.0;
        MicroRotation m = coefficients(variant, k);
        double c = m.c(), s = m.s();
        double x = c * st.x - eps * s * st.y;
        double y = eps * s * st.x + c * st.y;
        st.x = x;
        st.y = y;
        st.z -= eps * detail::atan_pow2(k);
    }
    return {st.x, st.y, st.z};
}

// --- Argument reduction -----------------------------------------------------

// theta mapped into [0, pi/4] plus the octant needed to undo the mapping.
struct Reduction {
    double reduced = 0;  // in [0, pi/4]
    int octant = 0;      // 0..7
};

// How to turn (cos r, sin r) of the reduced angle back into (cos theta,
// sin theta): optionally swap the pair, then apply the signs.
struct Symmetry {
    bool swap_pair = false;
    int cos_sign = +1;
    int sin_sign = +1;
};

inline Symmetry octant_symmetry(int octant) {
    if (octant < 0 || octant > 7) throw std::out_of_range("octant_symmetry: octant must be 0..7");
    Symmetry s;
    s.swap_pair = (octant == 1 || octant == 2 || octant == 5 || octant == 6);
    s.cos_sign = (octant >= 2 && octant <= 5) ? -1 : +1;
    s.sin_sign = (octant >= 4) ? -1 : +1;
    return s;
}

inline Reduction reduce_argument(double theta) {
    if (!std::isfinite(theta)) throw std::domain_error("reduce_argument: theta must be finite");
    constexpr double two_pi = 6.283185307179586476925286766559;
    constexpr double quarter = 0.78539816339744830961566084581988;  // pi/4
    double t = std::fmod(theta, two_pi);
    if (t < 0) t += two_pi;
    int octant = static_cast<int>(t / quarter);
    if (octant > 7) octant = 7;  // guard the t == 2*pi - epsilon rounding edge
    double local = t - octant * quarter;
    if (local < 0) local = 0;
    double reduced = (octant % 2 == 0) ? local : quarter - local;
    if (reduced < 0) reduced = 0;
    if (reduced > quarter) reduced = quarter;
    return {reduced, octant};
}

// Recover (cos theta, sin theta) from the reduced-angle pair.
inline std::pair<double, double> reconstruct(int octant, double cos_reduced, double sin_reduced) {
    Symmetry sym = octant_symmetry(octant);
    double c = sym.swap_pair ? sin_reduced : cos_reduced;
    double s = sym.swap_pair ? cos_reduced : sin_reduced;
    return {sym.cos_sign * c, sym.sin_sign * s};
}

}  // namespace cordic
