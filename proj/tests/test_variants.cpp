// SPDX-License-Identifier: MIT
#include <cordic/variants.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using cordic::BigInt;
using cordic::Rational;
using cordic::Variant;

namespace {
Rational pow2_inv(int shift) { return Rational(1) / (BigInt(1) << shift); }
}  // namespace

TEST_CASE("variant ids round-trip", "[variants]") {
    for (Variant v : cordic::all_variants()) CHECK(cordic::parse_variant(cordic::variant_id(v)) == v);
    CHECK(cordic::all_variants().size() == 6);
    CHECK(cordic::variant_id(Variant::ProposedO3) == "proposed-o3");
    CHECK_THROWS_AS(cordic::parse_variant("bogus"), std::invalid_argument);
}

TEST_CASE("coefficient closed forms as exact dyadic rationals", "[variants]") {
    for (int k = 0; k <= 15; ++k) {
        Rational c_base = 1 - pow2_inv(2 * k + 1);
        Rational c_high = c_base + 3 * pow2_inv(4 * k + 3);
        Rational s_base = pow2_inv(k);

        CHECK(cordic::coefficients(Variant::CompetitorA, k).sin_approx.to_rational() ==
              s_base - pow2_inv(3 * k + 3));
        CHECK(cordic::coefficients(Variant::CompetitorB, k).sin_approx.to_rational() ==
              s_base - pow2_inv(3 * k + 2));
        CHECK(cordic::coefficients(Variant::ProposedO3, k).sin_approx.to_rational() ==
              s_base - pow2_inv(3 * k + 1));
        CHECK(cordic::coefficients(Variant::ProposedO5, k).sin_approx.to_rational() ==
              s_base - pow2_inv(3 * k + 1) + 3 * pow2_inv(5 * k + 3));

        for (Variant v : {Variant::CompetitorA, Variant::CompetitorB, Variant::ProposedO3})
            CHECK(cordic::coefficients(v, k).cos_approx.to_rational() == c_base);
        for (Variant v : {Variant::ProposedO4, Variant::ProposedO5})
            CHECK(cordic::coefficients(v, k).cos_approx.to_rational() == c_high);

        // The order-4 scheme refines only the cosine; its sine equals the
        // order-3 form, and the order-5 sine adds exactly 3 * 2^-(5k+3).
        CHECK(cordic::coefficients(Variant::ProposedO4, k).sin_approx.to_rational() ==
              cordic::coefficients(Variant::ProposedO3, k).sin_approx.to_rational());
        CHECK(cordic::coefficients(Variant::ProposedO5, k).sin_approx.to_rational() -
                  cordic::coefficients(Variant::ProposedO4, k).sin_approx.to_rational() ==
              3 * pow2_inv(5 * k + 3));
    }

    // Spot values at k = 1: c = 1 - 1/8 = 0.875, s = 1/2 - 1/16 = 0.4375.
    cordic::MicroRotation m = cordic::coefficients(Variant::ProposedO3, 1);
    CHECK(m.c() == 0.875);
    CHECK(m.s() == 0.4375);
    CHECK(m.angle == Catch::Approx(std::atan(0.5)).margin(1e-15));

    CHECK_THROWS_AS(cordic::coefficients(Variant::Conventional, 1), std::invalid_argument);
    CHECK_THROWS_AS(cordic::coefficients(Variant::ProposedO3, -1), std::out_of_range);
    CHECK_THROWS_AS(cordic::coefficients(Variant::ProposedO3, 32), std::out_of_range);
}

TEST_CASE("closed forms equal the composed-series derivation", "[variants]") {
    // Orders 3/4/5 of the composed series, evaluated exactly at x = 2^-k,
    // must reproduce the shipped shift-add forms coefficient-for-coefficient.
    struct Case {
        int order;
        Variant v;
    };
    for (Case c : {Case{3, Variant::ProposedO3}, Case{4, Variant::ProposedO4},
                   Case{5, Variant::ProposedO5}}) {
        for (int k = 0; k <= 12; ++k) {
            auto [cos_exact, sin_exact] = cordic::derive_composed_coefficients(c.order, k);
            cordic::MicroRotation m = cordic::coefficients(c.v, k);
            CHECK(m.cos_approx.to_rational() == cos_exact);
            CHECK(m.sin_approx.to_rational() == sin_exact);
        }
    }
}

TEST_CASE("truncation error is bounded by the first omitted term", "[variants]") {
    // cos(arctan x) = (1+x^2)^-1/2 and sin(arctan x) = x (1+x^2)^-1/2 are
    // alternating series in x^2 with decreasing terms for x <= 1, so the
    // truncation error of each shipped form is at most the first omitted term.
    for (int k = 0; k <= 15; ++k) {
        double x = std::ldexp(1.0, -k);
        double true_c = 1.0 / std::sqrt(1.0 + x * x);
        double true_s = x / std::sqrt(1.0 + x * x);

        double err_c3 = std::fabs(cordic::coefficients(Variant::ProposedO3, k).c() - true_c);
        CHECK(err_c3 <= 3 * std::ldexp(1.0, -(4 * k + 3)) + 1e-18);

        double err_c5 = std::fabs(cordic::coefficients(Variant::ProposedO5, k).c() - true_c);
        CHECK(err_c5 <= (5.0 / 16.0) * std::ldexp(1.0, -6 * k) + 1e-18);

        double err_s3 = std::fabs(cordic::coefficients(Variant::ProposedO3, k).s() - true_s);
        CHECK(err_s3 <= 3 * std::ldexp(1.0, -(5 * k + 3)) + 1e-18);

        double err_s5 = std::fabs(cordic::coefficients(Variant::ProposedO5, k).s() - true_s);
        CHECK(err_s5 <= (5.0 / 16.0) * std::ldexp(1.0, -7 * k) + 1e-18);
    }
}

TEST_CASE("sine coefficient accuracy ordering across schemes", "[variants]") {
    // For every index the order-3 sine is the closest of the three third-order
    // forms, and the only one that does not overshoot the true value.
    for (int k = 1; k <= 15; ++k) {
        double x = std::ldexp(1.0, -k);
        double true_s = x / std::sqrt(1.0 + x * x);
        double da = std::fabs(cordic::coefficients(Variant::CompetitorA, k).s() - true_s);
        double db = std::fabs(cordic::coefficients(Variant::CompetitorB, k).s() - true_s);
        double d3 = std::fabs(cordic::coefficients(Variant::ProposedO3, k).s() - true_s);
        CHECK(da > db);
        CHECK(db > d3);
        CHECK(cordic::coefficients(Variant::ProposedO3, k).s() <= true_s);
    }
}

TEST_CASE("shift-add forms evaluate consistently in double and rational", "[variants]") {
    for (Variant v : {Variant::CompetitorA, Variant::CompetitorB, Variant::ProposedO3,
                      Variant::ProposedO4, Variant::ProposedO5}) {
        for (int k = 0; k <= 15; ++k) {
            cordic::MicroRotation m = cordic::coefficients(v, k);
            double c_exact = static_cast<double>(m.cos_approx.to_rational());
            double s_exact = static_cast<double>(m.sin_approx.to_rational());
            if (k <= 12) {
                // Term spans fit a double mantissa: accumulation is exact.
                CHECK(m.c() == c_exact);
                CHECK(m.s() == s_exact);
            } else {
                // Beyond k = 12 the highest-order term falls off the mantissa
                // and sequential accumulation may double-round by one ulp.
                CHECK(std::fabs(m.c() - c_exact) <= std::ldexp(std::fabs(c_exact), -52));
                CHECK(std::fabs(m.s() - s_exact) <= std::ldexp(std::fabs(s_exact), -52));
            }
            for (const auto& t : m.cos_approx.terms) CHECK((t.sign == 1 || t.sign == -1));
            for (const auto& t : m.sin_approx.terms) CHECK(t.shift >= 0);
        }
    }
}
