// SPDX-License-Identifier: MIT
#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace cordic {

// Signed 32-bit fixed-point word in Q2.30 format: 1 sign bit, 1 integer bit,
// 30 fraction bits. This is the hardware word used for X, Y, Z and the
// arctangent ROM; all arithmetic below mirrors a two's-complement datapath
// (wrap-around add/sub, sign-extending right shift, truncating quantization).
struct Q30Fixed {
    int32_t raw = 0;

    static constexpr int fraction_bits = 30;

    static constexpr Q30Fixed from_raw(int32_t r) { return Q30Fixed{r}; }

    // Quantize a real number by truncation toward negative infinity
    // (floor(v * 2^30)), which is the convention the ROM constants follow.
    static Q30Fixed from_real(long double v) {
        if (!(fabsl(v) < 2.0L))
            throw std::domain_error("Q30Fixed::from_real: |value| must be < 2");
        long double scaled = floorl(v * 1073741824.0L);  // 2^30
        return from_raw(static_cast<int32_t>(static_cast<int64_t>(scaled)));
    }

    // raw / 2^30; exact in double (raw has at most 31 significant bits).
    double value() const { return static_cast<double>(raw) / 1073741824.0; }

    friend bool operator==(Q30Fixed a, Q30Fixed b) { return a.raw == b.raw; }
    friend bool operator!=(Q30Fixed a, Q30Fixed b) { return a.raw != b.raw; }
};

// Sign-extending (arithmetic) right shift; for non-negative v this equals
// floor(v / 2^amount). amount must lie in [0, 31].
inline Q30Fixed arithmetic_shift_right(Q30Fixed v, int amount) {
    assert(amount >= 0 && amount <= 31);
    return Q30Fixed::from_raw(v.raw >> amount);  // arithmetic for signed since C++20
}

// Two's-complement wrap-around addition. No saturation: overflow wraps, as in
// hardware. If `wrapped` is given it is set when the signed result wrapped.
inline Q30Fixed add(Q30Fixed a, Q30Fixed b, bool* wrapped = nullptr) {
    uint32_t ur = static_cast<uint32_t>(a.raw) + static_cast<uint32_t>(b.raw);
    auto r = static_cast<int32_t>(ur);
    if (wrapped)
        *wrapped = ((a.raw >= 0) == (b.raw >= 0)) && ((r >= 0) != (a.raw >= 0));
    return Q30Fixed::from_raw(r);
}

inline Q30Fixed negate(Q30Fixed a) {
    return Q30Fixed::from_raw(static_cast<int32_t>(0u - static_cast<uint32_t>(a.raw)));
}

inline Q30Fixed sub(Q30Fixed a, Q30Fixed b, bool* wrapped = nullptr) {
    uint32_t ur = static_cast<uint32_t>(a.raw) - static_cast<uint32_t>(b.raw);
    auto r = static_cast<int32_t>(ur);
    if (wrapped)
        *wrapped = ((a.raw >= 0) != (b.raw >= 0)) && ((r >= 0) != (a.raw >= 0));
    return Q30Fixed::from_raw(r);
}

// 8 uppercase hex digits, e.g. "3243F6A8" — the stable rendering used by the
// ROM dump and trace output.
inline std::string to_hex(Q30Fixed v) {
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08X", static_cast<uint32_t>(v.raw));
    return std::string(buf);
}

}  // namespace cordic
