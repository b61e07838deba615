// SPDX-License-Identifier: MIT
#pragma once

#include <cordic/engine.hpp>
#include <cordic/hwsim.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cordic {

enum class ErrFn { Cos, Sin };

inline const char* errfn_name(ErrFn f) { return f == ErrFn::Cos ? "cos" : "sin"; }

enum class Domain { Float, Fixed };

// Sweep parameters: uniform grid over [0, pi/4] including both endpoints.
struct SweepConfig {
    int samples = 512;
    std::vector<int> iteration_counts{3, 4, 5};
    std::vector<Variant> variants{Variant::CompetitorA, Variant::CompetitorB,
                                  Variant::ProposedO3};
    Domain domain = Domain::Float;
};

struct CellStats {
    double mse = 0;
    double max_abs = 0;
};

struct CellKey {
    Variant variant;
    int iterations;
    ErrFn fn;
    friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct ErrorReport {
    std::map<CellKey, CellStats> cells;

    const CellStats& at(Variant v, int n, ErrFn f) const {
        auto it = cells.find(CellKey{v, n, f});
        if (it == cells.end())
            throw std::out_of_range("ErrorReport: missing cell " + variant_id(v) + "/" +
                                    std::to_string(n) + "/" + errfn_name(f));
        return it->second;
    }
};

namespace detail {
inline double grid_angle(int i, int samples) {
    return 0.78539816339744830961566084581988 * i / (samples - 1);
}

// One engine evaluation of (cos, sin) at theta in the requested domain.
inline std::pair<double, double> evaluate(Variant v, int iterations, Domain domain, double theta) {
    if (domain == Domain::Float) {
        EngineResult r = (v == Variant::Conventional) ? run_conventional(theta, iterations)
                                                      : run_scalefree(theta, iterations, v);
        return {r.cos_est, r.sin_est};
    }
    IterativeResult r = run_iterative(Q30Fixed::from_real(theta), iterations, v);
    return {r.X.value(), r.Y.value()};
}

// Deterministic compensated accumulation (fixed grid order).
struct KahanSum {
    double sum = 0, carry = 0;
    void add(double v) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};
}  // namespace detail

// Measure an arbitrary (cos, sin) approximation against reference_sincos.
// Returns {cos stats, sin stats}; the sweep order is fixed, so results are
// bit-reproducible run to run.
inline std::pair<CellStats, CellStats> measure_against_reference(
    const std::function<std::pair<double, double>(double)>& fn, int samples = 512) {
    if (samples < 2) throw std::invalid_argument("measure_against_reference: samples must be >= 2");
    detail::KahanSum se_cos, se_sin;
    CellStats cs, sn;
    for (int i = 0; i < samples; ++i) {
        double theta = detail::grid_angle(i, samples);
        auto [c, s] = fn(theta);
        auto [rc, rs] = reference_sincos(theta);
        double ec = c - rc, es = s - rs;
        se_cos.add(ec * ec);
        se_sin.add(es * es);
        cs.max_abs = std::max(cs.max_abs, std::fabs(ec));
        sn.max_abs = std::max(sn.max_abs, std::fabs(es));
    }
    cs.mse = se_cos.sum / samples;
    sn.mse = se_sin.sum / samples;
    return {cs, sn};
}

// Run the full sweep for every (variant, iteration count) in the config.
inline ErrorReport run_sweep(const SweepConfig& config) {
    ErrorReport report;
    for (Variant v : config.variants)
        for (int n : config.iteration_counts) {
            auto [cs, sn] = measure_against_reference(
                [&](double theta) { return detail::evaluate(v, n, config.domain, theta); },
                config.samples);
            report.cells[CellKey{v, n, ErrFn::Cos}] = cs;
            report.cells[CellKey{v, n, ErrFn::Sin}] = sn;
        }
    return report;
}

enum class TableLayout { MethodsCos, MethodsSin, Orders };

inline TableLayout parse_layout(const std::string& s) {
    if (s == "methods-cos") return TableLayout::MethodsCos;
    if (s == "methods-sin") return TableLayout::MethodsSin;
    if (s == "orders") return TableLayout::Orders;
    throw std::invalid_argument("unknown table layout: " + s);
}

struct RenderedTable {
    std::string text;
    std::string csv;
};

// Render a report in one of the three comparison layouts. The method layouts
// put the three schemes side by side per iteration count for one function;
// the orders layout compares the three proposed truncation orders for both
// functions. Throws if the report lacks a needed cell.
inline RenderedTable emit_table(const ErrorReport& report, TableLayout layout) {
    RenderedTable out;
    out.csv = "variant,iterations,function,mse,max_abs\n";
    char buf[160];
    auto csv_row = [&](Variant v, int n, ErrFn f) {
        const CellStats& c = report.at(v, n, f);
        std::snprintf(buf, sizeof buf, "%s,%d,%s,%.10e,%.10e\n", variant_id(v).c_str(), n,
                      errfn_name(f), c.mse, c.max_abs);
        out.csv += buf;
    };

    const std::vector<int> counts{3, 4, 5};
    if (layout == TableLayout::MethodsCos || layout == TableLayout::MethodsSin) {
        ErrFn fn = (layout == TableLayout::MethodsCos) ? ErrFn::Cos : ErrFn::Sin;
        const std::vector<Variant> cols{Variant::CompetitorA, Variant::CompetitorB,
                                        Variant::ProposedO3};
        out.text = std::string(errfn_name(fn)) +
                   " mean squared error, uniform sweep of [0, pi/4]\n"
                   "iterations  competitor-a  competitor-b   proposed-o3\n";
        for (int n : counts) {
            std::snprintf(buf, sizeof buf, "%10d  %12.4e  %12.4e  %12.4e\n", n,
                          report.at(cols[0], n, fn).mse, report.at(cols[1], n, fn).mse,
                          report.at(cols[2], n, fn).mse);
            out.text += buf;
            for (Variant v : cols) csv_row(v, n, fn);
        }
    } else {
        const std::vector<Variant> cols{Variant::ProposedO5, Variant::ProposedO4,
                                        Variant::ProposedO3};
        out.text =
            "mean squared error by truncation order, uniform sweep of [0, pi/4]\n"
            "iterations  function   proposed-o5   proposed-o4   proposed-o3\n";
        for (int n : counts)
            for (ErrFn fn : {ErrFn::Cos, ErrFn::Sin}) {
                std::snprintf(buf, sizeof buf, "%10d  %8s  %12.4e  %12.4e  %12.4e\n", n,
                              errfn_name(fn), report.at(cols[0], n, fn).mse,
                              report.at(cols[1], n, fn).mse, report.at(cols[2], n, fn).mse);
                out.text += buf;
                for (Variant v : cols) csv_row(v, n, fn);
            }
    }
    return out;
}

// Per-grid-point series for one (variant, iteration count, function):
// CSV of (theta, approx, reference, difference), difference = approx - reference.
inline std::string emit_curve(Variant variant, int iterations, ErrFn fn, int samples = 512,
                              Domain domain = Domain::Float) {
    if (samples < 2) throw std::invalid_argument("emit_curve: samples must be >= 2");
    std::string out = "theta,approx,reference,difference\n";
    char buf[160];
    for (int i = 0; i < samples; ++i) {
        double theta = detail::grid_angle(i, samples);
        auto [c, s] = detail::evaluate(variant, iterations, domain, theta);
        auto [rc, rs] = reference_sincos(theta);
        double approx = (fn == ErrFn::Cos) ? c : s;
        double ref = (fn == ErrFn::Cos) ? rc : rs;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", theta, approx, ref,
                      approx - ref);
        out += buf;
    }
    return out;
}

}  // namespace cordic
