// SPDX-License-Identifier: MIT
#pragma once

#include <cordic/fixedpoint.hpp>
#include <cordic/refmath.hpp>
#include <cordic/selector.hpp>
#include <cordic/variants.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cordic {

// --- Arctangent ROM ----------------------------------------------------------

// 32 Q2.30 words, entries[k] = floor(arctan(2^-k) * 2^30). Entry 31 truncates
// to zero: arctan(2^-31) < 2^-30.
struct RomTable {
    std::array<Q30Fixed, 32> entries{};

    static const RomTable& instance() {
        static const RomTable rom = [] {
            RomTable r;
            for (int k = 0; k < 32; ++k)
                r.entries[static_cast<size_t>(k)] = Q30Fixed::from_real(atanl(ldexpl(1.0L, -k)));
            return r;
        }();
        return rom;
    }
};

// 32 lines of 8 uppercase hex digits, LF-terminated: the stable dump format.
inline std::string rom_dump(const RomTable& rom = RomTable::instance()) {
    std::string out;
    out.reserve(32 * 9);
    for (const auto& e : rom.entries) {
        out += to_hex(e);
        out += '\n';
    }
    return out;
}

// --- Index predictor ---------------------------------------------------------

struct IndexPrediction {
    int k;
    int sign;  // +1 or -1
};

// Leading-one detection on |z| plus the midpoint compare of
// closest_index_bits. Rejects zero: the FSM treats a zero residual as a
// "no rotation" clock before consulting the predictor.
inline IndexPrediction predict_index(Q30Fixed z_error) {
    if (z_error.raw == 0)
        throw std::domain_error("predict_index: zero residual is a no-rotation signal");
    int sign = (z_error.raw > 0) ? +1 : -1;
    Q30Fixed mag = (sign > 0) ? z_error : negate(z_error);
    return {closest_index_bits(mag), sign};
}

// --- Datapath ----------------------------------------------------------------

enum class Phase { Init, Iterate, Done };

inline const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Init: return "INIT";
        case Phase::Iterate: return "ITERATE";
        case Phase::Done: return "DONE";
    }
    return "?";
}

struct DatapathState {
    Q30Fixed X, Y, Z;
    Phase phase = Phase::Init;
    int iteration_counter = 0;
    int cycle_count = 0;
};

// One per-clock trace record; k = -1 and sign = 0 on clocks that apply no
// rotation (INIT, DONE, zero-residual iterate cycles).
struct TraceRow {
    int cycle;
    Phase phase;
    int k;
    int sign;
    Q30Fixed x, y, z;
};

using Trace = std::vector<TraceRow>;

inline void append_trace(Trace* trace, const DatapathState& st, Phase during, int k, int sign) {
    if (trace) trace->push_back({st.cycle_count, during, k, sign, st.X, st.Y, st.Z});
}

// Evaluate a shift-add coefficient applied to v: sum of sign * (v >> shift),
// accumulated in term order with wrap-around adds. Shift amounts beyond the
// word width saturate at 31 (the barrel shifter's sign fill leaves only sign
// bits). There is no multiplier anywhere in this path.
inline Q30Fixed apply_shift_add(const ShiftAddForm& form, Q30Fixed v) {
    Q30Fixed acc{};
    for (const auto& t : form.terms) {
        Q30Fixed addend = arithmetic_shift_right(v, t.shift > 31 ? 31 : t.shift);
        acc = (t.sign > 0) ? add(acc, addend) : sub(acc, addend);
    }
    return acc;
}

// One ITERATE clock. Scale-free schemes use the dynamic predictor (with the
// rotation-path index clamped to k >= 1, matching the float engine — the
// coefficient polynomials are invalid at k = 0); the conventional scheme
// walks the fixed schedule k = iteration_counter. The selected k addresses
// both the coefficient shifts and the ROM word so the residual bookkeeping
// stays consistent with the applied rotation.
inline void step_iterative(DatapathState& st, const RomTable& rom, Variant variant,
                           int total_iterations, Trace* trace = nullptr) {
    if (st.phase != Phase::Iterate)
        throw std::logic_error("step_iterative: datapath is not in the ITERATE phase");
    ++st.cycle_count;

    int traced_k = -1, traced_sign = 0;
    if (variant == Variant::Conventional) {
        int k = st.iteration_counter;
        int eps = (st.Z.raw >= 0) ? +1 : -1;
        Q30Fixed xs = arithmetic_shift_right(st.X, k);
        Q30Fixed ys = arithmetic_shift_right(st.Y, k);
        Q30Fixed nx = (eps > 0) ? sub(st.X, ys) : add(st.X, ys);
        Q30Fixed ny = (eps > 0) ? add(st.Y, xs) : sub(st.Y, xs);
        st.Z = (eps > 0) ? sub(st.Z, rom.entries[static_cast<size_t>(k)])
                         : add(st.Z, rom.entries[static_cast<size_t>(k)]);
        st.X = nx;
        st.Y = ny;
        traced_k = k;
        traced_sign = eps;
    } else if (st.Z.raw != 0) {
        IndexPrediction p = predict_index(st.Z);
        int k = (p.k < 1) ? 1 : p.k;
        MicroRotation m = coefficients(variant, k);
        Q30Fixed cx = apply_shift_add(m.cos_approx, st.X);
        Q30Fixed cy = apply_shift_add(m.cos_approx, st.Y);
        Q30Fixed sx = apply_shift_add(m.sin_approx, st.X);
        Q30Fixed sy = apply_shift_add(m.sin_approx, st.Y);
        st.X = (p.sign > 0) ? sub(cx, sy) : add(cx, sy);
        st.Y = (p.sign > 0) ? add(sx, cy) : sub(cy, sx);
        st.Z = (p.sign > 0) ? sub(st.Z, rom.entries[static_cast<size_t>(k)])
                            : add(st.Z, rom.entries[static_cast<size_t>(k)]);
        traced_k = k;
        traced_sign = p.sign;
    }
    // zero residual in a scale-free scheme: the clock passes X/Y/Z through

    ++st.iteration_counter;
    if (st.iteration_counter >= total_iterations) st.phase = Phase::Done;
    append_trace(trace, st, Phase::Iterate, traced_k, traced_sign);
}

struct IterativeResult {
    Q30Fixed X, Y;
    int cycles = 0;
};

namespace detail {
constexpr double quarter_pi_bound = 0.7853981633974484;

inline void check_theta_range(Q30Fixed theta) {
    if (std::fabs(theta.value()) > quarter_pi_bound)
        throw std::domain_error("hwsim: |theta| must be <= pi/4");
}

// Q2.30 * Q2.30 -> Q2.30 with truncation: the one multiply in the module,
// used only for the conventional baseline's final scale compensation
// (the shift-add datapath itself is multiplier-free).
inline Q30Fixed mul_q30(Q30Fixed a, Q30Fixed b) {
    int64_t prod = static_cast<int64_t>(a.raw) * static_cast<int64_t>(b.raw);
    return Q30Fixed::from_raw(static_cast<int32_t>(prod >> 30));
}
}  // namespace detail

// Full iterative run: INIT clock loads (1, 0, theta), `iterations` ITERATE
// clocks, one DONE clock; cycles = iterations + 2. The conventional baseline
// applies the K(n) compensation to the outputs after DONE.
inline IterativeResult run_iterative(Q30Fixed theta, int iterations, Variant variant,
                                     Trace* trace = nullptr) {
    detail::check_theta_range(theta);
    int max_iters = (variant == Variant::Conventional) ? 32 : 16;
    if (iterations < 1 || iterations > max_iters)
        throw std::invalid_argument("run_iterative: iteration count out of range");

    DatapathState st;
    ++st.cycle_count;  // INIT clock
    st.X = Q30Fixed::from_real(1.0);
    st.Y = Q30Fixed::from_raw(0);
    st.Z = theta;
    st.phase = Phase::Init;
    append_trace(trace, st, Phase::Init, -1, 0);
    st.phase = Phase::Iterate;

    const RomTable& rom = RomTable::instance();
    while (st.phase == Phase::Iterate) step_iterative(st, rom, variant, iterations, trace);

    ++st.cycle_count;  // DONE clock: outputs latch, done flag raises
    if (variant == Variant::Conventional) {
        Q30Fixed K = Q30Fixed::from_real(scale_factor(iterations));
        st.X = detail::mul_q30(st.X, K);
        st.Y = detail::mul_q30(st.Y, K);
    }
    append_trace(trace, st, Phase::Done, -1, 0);
    return {st.X, st.Y, st.cycle_count};
}

// --- Pipelined organization ----------------------------------------------------

struct PipelineConfig {
    int stages = 4;               // 3 or 4
    bool shared_predictor = true; // single predictor instance feeding all stages
};

struct ThroughputReport {
    int latency_cycles = 0;    // first input to first output: stages + 2
    long total_cycles = 0;     // latency + (inputs - 1): one result per clock after fill
    double results_per_cycle = 1.0;
};

struct PipelineResult {
    std::vector<std::pair<Q30Fixed, Q30Fixed>> outputs;
    ThroughputReport report;
};

// `stages` copies of the iterative unit separated by stage registers; one
// new input enters per clock and one result leaves per clock once the pipe
// is full. Every clock advances each in-flight element by one stage (deepest
// stage first, so the register it vacates is free for its neighbour). With
// stages = iterations the per-element arithmetic is the same step sequence
// as the iterative datapath, so outputs are bit-identical to run_iterative.
// When a trace sink is given, the first input's passage is traced.
inline PipelineResult run_pipelined(const std::vector<Q30Fixed>& thetas, PipelineConfig config,
                                    Variant variant, Trace* trace = nullptr) {
    if (config.stages != 3 && config.stages != 4)
        throw std::invalid_argument("run_pipelined: stage count must be 3 or 4");
    for (Q30Fixed t : thetas) detail::check_theta_range(t);

    PipelineResult result;
    result.outputs.resize(thetas.size());
    result.report.latency_cycles = config.stages + 2;
    result.report.results_per_cycle = 1.0;
    if (thetas.empty()) return result;

    const RomTable& rom = RomTable::instance();
    const auto stages = static_cast<size_t>(config.stages);

    struct Slot {
        DatapathState st;
        size_t input = 0;
        bool valid = false;
    };
    std::vector<Slot> reg(stages);  // reg[s]: element that has completed s stages
    Slot out_reg;                   // retired element awaiting its DONE latch

    long clock = 0;
    size_t accepted = 0, emitted = 0;
    while (emitted < thetas.size()) {
        ++clock;
        // DONE latch of the element that left the last stage on the previous clock.
        if (out_reg.valid) {
            DatapathState& st = out_reg.st;
            ++st.cycle_count;
            if (variant == Variant::Conventional) {
                Q30Fixed K = Q30Fixed::from_real(scale_factor(config.stages));
                st.X = detail::mul_q30(st.X, K);
                st.Y = detail::mul_q30(st.Y, K);
            }
            append_trace(out_reg.input == 0 ? trace : nullptr, st, Phase::Done, -1, 0);
            result.outputs[out_reg.input] = {st.X, st.Y};
            ++emitted;
            out_reg.valid = false;
        }
        // Advance in-flight elements, deepest stage first.
        for (size_t s = stages; s-- > 0;) {
            if (!reg[s].valid) continue;
            Slot slot = reg[s];
            reg[s].valid = false;
            step_iterative(slot.st, rom, variant, config.stages,
                           slot.input == 0 ? trace : nullptr);
            if (slot.st.phase == Phase::Done)
                out_reg = slot;
            else
                reg[s + 1] = slot;
        }
        // Accept one new input per clock while the first stage register is free.
        if (accepted < thetas.size() && !reg[0].valid) {
            Slot slot;
            slot.input = accepted;
            slot.st.X = Q30Fixed::from_real(1.0);
            slot.st.Y = Q30Fixed::from_raw(0);
            slot.st.Z = thetas[accepted];
            slot.st.phase = Phase::Init;
            slot.st.cycle_count = 1;  // this clock is the element's INIT
            append_trace(slot.input == 0 ? trace : nullptr, slot.st, Phase::Init, -1, 0);
            slot.st.phase = Phase::Iterate;
            slot.valid = true;
            reg[0] = slot;
            ++accepted;
        }
    }
    result.report.total_cycles = clock;
    return result;
}

// Trace serialization: header + one row per clock.
inline std::string trace_csv(const Trace& trace) {
    std::string out = "cycle,phase,k,sign,x_hex,y_hex,z_hex\n";
    char line[96];
    for (const TraceRow& r : trace) {
        if (r.k >= 0)
            std::snprintf(line, sizeof line, "%d,%s,%d,%+d,%s,%s,%s\n", r.cycle,
                          phase_name(r.phase), r.k, r.sign, to_hex(r.x).c_str(),
                          to_hex(r.y).c_str(), to_hex(r.z).c_str());
        else
            std::snprintf(line, sizeof line, "%d,%s,-,0,%s,%s,%s\n", r.cycle,
                          phase_name(r.phase), to_hex(r.x).c_str(), to_hex(r.y).c_str(),
                          to_hex(r.z).c_str());
        out += line;
    }
    return out;
}

}  // namespace cordic
