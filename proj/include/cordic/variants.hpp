// SPDX-License-Identifier: MIT
#pragma once

#include <cordic/refmath.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cordic {

// One approximation scheme for the micro-rotation matrix entries.
// `Conventional` uses exact tangents 2^-k with a final scale compensation;
// the scale-free schemes approximate cos/sin of arctan(2^-k) with truncated
// composed Taylor polynomials of increasing order.
enum class Variant {
    Conventional,
    CompetitorA,   // c = 1 - 2^-(2k+1),                 s = 2^-k - 2^-(3k+3)
    CompetitorB,   // c = 1 - 2^-(2k+1),                 s = 2^-k - 2^-(3k+2)
    ProposedO3,    // c = 1 - 2^-(2k+1),                 s = 2^-k - 2^-(3k+1)
    ProposedO4,    // c = 1 - 2^-(2k+1) + 3*2^-(4k+3),   s = 2^-k - 2^-(3k+1)
    ProposedO5,    // c = 1 - 2^-(2k+1) + 3*2^-(4k+3),   s = 2^-k - 2^-(3k+1) + 3*2^-(5k+3)
};

inline const std::vector<Variant>& all_variants() {
    static const std::vector<Variant> v{Variant::Conventional, Variant::CompetitorA,
                                        Variant::CompetitorB,  Variant::ProposedO3,
                                        Variant::ProposedO4,   Variant::ProposedO5};
    return v;
}

inline std::string variant_id(Variant v) {
    switch (v) {
        case Variant::Conventional: return "conventional";
        case Variant::CompetitorA: return "competitor-a";
        case Variant::CompetitorB: return "competitor-b";
        case Variant::ProposedO3: return "proposed-o3";
        case Variant::ProposedO4: return "proposed-o4";
        case Variant::ProposedO5: return "proposed-o5";
    }
    throw std::logic_error("variant_id: unknown variant");
}

inline Variant parse_variant(const std::string& id) {
    for (Variant v : all_variants())
        if (variant_id(v) == id) return v;
    throw std::invalid_argument("unknown variant id: " + id);
}

// A coefficient expressed as a sum of signed powers of two,
// sum_i sign_i * 2^-shift_i — directly realizable as shifts and adds.
struct ShiftAddTerm {
    int sign;   // +1 or -1
    int shift;  // >= 0, weight 2^-shift
};

struct ShiftAddForm {
    std::vector<ShiftAddTerm> terms;

    double value() const {
        double acc = 0;
        for (const auto& t : terms) acc += t.sign * std::ldexp(1.0, -t.shift);
        return acc;
    }

    // Exact dyadic value, for theorem-level comparisons in tests.
    Rational to_rational() const {
        Rational acc = 0;
        for (const auto& t : terms)
            acc += Rational(t.sign) / (BigInt(1) << t.shift);
        return acc;
    }
};

// An elementary rotation by arctan(2^-k) together with the variant's
// shift-add approximants of its cosine and sine.
struct MicroRotation {
    int k = 0;
    double angle = 0;  // arctan(2^-k)
    ShiftAddForm cos_approx;
    ShiftAddForm sin_approx;

    double c() const { return cos_approx.value(); }
    double s() const { return sin_approx.value(); }
};

namespace detail {
// 3 * 2^-m decomposed as 2^-(m-1) + 2^-m (m >= 1 always holds here).
inline void push_three_halves_pow(ShiftAddForm& f, int m) {
    f.terms.push_back({+1, m - 1});
    f.terms.push_back({+1, m});
}
}  // namespace detail

// Closed-form coefficients for the scale-free schemes. The conventional
// scheme carries no coefficient approximation (its cosine factors are folded
// into the scale constant), so requesting it here is an error.
inline MicroRotation coefficients(Variant variant, int k) {
    if (variant == Variant::Conventional)
        throw std::invalid_argument("coefficients: conventional scheme has no coefficient table");
    if (k < 0 || k > 31) throw std::out_of_range("coefficients: k must lie in [0, 31]");

    MicroRotation m;
    m.k = k;
    m.angle = std::atan(std::ldexp(1.0, -k));

    ShiftAddForm c, s;
    c.terms.push_back({+1, 0});
    c.terms.push_back({-1, 2 * k + 1});
    if (variant == Variant::ProposedO4 || variant == Variant::ProposedO5)
        detail::push_three_halves_pow(c, 4 * k + 3);

    s.terms.push_back({+1, k});
    switch (variant) {
        case Variant::CompetitorA: s.terms.push_back({-1, 3 * k + 3}); break;
        case Variant::CompetitorB: s.terms.push_back({-1, 3 * k + 2}); break;
        default: s.terms.push_back({-1, 3 * k + 1}); break;
    }
    if (variant == Variant::ProposedO5)
        detail::push_three_halves_pow(s, 5 * k + 3);

    m.cos_approx = std::move(c);
    m.sin_approx = std::move(s);
    return m;
}

// Derive the proposed coefficients from first principles: compose the sin/cos
// Maclaurin series with the arctan series, truncate at `order`, and evaluate
// at x = 2^-k exactly. Orders 3/4/5 correspond to ProposedO3/O4/O5; tests
// assert this equals the closed forms above, making the coefficient table a
// checked consequence of the series algebra rather than a transcription.
inline std::pair<Rational, Rational> derive_composed_coefficients(int order, int k) {
    if (order < 1) throw std::invalid_argument("derive_composed_coefficients: order must be >= 1");
    RationalPoly atan_p = taylor_series(SeriesFn::Arctan, order);
    RationalPoly cos_c = compose_truncate(taylor_series(SeriesFn::Cos, order), atan_p, order);
    RationalPoly sin_c = compose_truncate(taylor_series(SeriesFn::Sin, order), atan_p, order);
    Rational x = Rational(1) / (BigInt(1) << k);
    return {cos_c.eval(x), sin_c.eval(x)};
}

}  // namespace cordic
