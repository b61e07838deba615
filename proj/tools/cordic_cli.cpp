// SPDX-License-Identifier: MIT
//
// Command-line front end for the CORDIC toolkit: sin/cos evaluation with any
// of the implemented coefficient schemes (float or bit-exact fixed-point),
// greedy angle decomposition, error-table and curve emission, a pipelined
// hardware simulation with cycle accounting, and ROM/variant listings.

#include <cordic/bench.hpp>
#include <cordic/engine.hpp>
#include <cordic/hwsim.hpp>
#include <cordic/selector.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

double to_radians(double value, bool degrees) { return degrees ? value * kPi / 180.0 : value; }

struct ComputeOptions {
    double theta = 0;
    bool degrees = false;
    std::string variant = "proposed-o3";
    int iterations = 4;
    bool fixed = false;
};

int run_compute(const ComputeOptions& opt) {
    double theta = to_radians(opt.theta, opt.degrees);
    cordic::Variant variant = cordic::parse_variant(opt.variant);
    cordic::Reduction red = cordic::reduce_argument(theta);
    auto [ref_cos, ref_sin] = cordic::reference_sincos(theta);

    std::printf("theta: %.10f rad  (octant %d, reduced %.10f)\n", theta, red.octant, red.reduced);
    std::printf("variant: %s  iterations: %d  domain: %s\n", opt.variant.c_str(), opt.iterations,
                opt.fixed ? "fixed (Q2.30)" : "float");

    double c, s, residual;
    if (opt.fixed) {
        cordic::IterativeResult hw = cordic::run_iterative(
            cordic::Q30Fixed::from_real(red.reduced), opt.iterations, variant);
        std::tie(c, s) = cordic::reconstruct(red.octant, hw.X.value(), hw.Y.value());
        residual = 0;
        std::printf("X: 0x%s  Y: 0x%s  cycles: %d\n", cordic::to_hex(hw.X).c_str(),
                    cordic::to_hex(hw.Y).c_str(), hw.cycles);
    } else {
        cordic::EngineResult res =
            (variant == cordic::Variant::Conventional)
                ? cordic::run_conventional(red.reduced, opt.iterations)
                : cordic::run_scalefree(red.reduced, opt.iterations, variant);
        std::tie(c, s) = cordic::reconstruct(red.octant, res.cos_est, res.sin_est);
        residual = res.residual;
    }
    std::printf("cos: %.10f   reference: %.10f   abs error: %.4e\n", c, ref_cos,
                std::fabs(c - ref_cos));
    std::printf("sin: %.10f   reference: %.10f   abs error: %.4e\n", s, ref_sin,
                std::fabs(s - ref_sin));
    if (!opt.fixed) std::printf("residual: %.4e\n", residual);
    return 0;
}

int run_decompose(double theta_flag, bool degrees, int max_steps, double tolerance,
                  const std::string& out_path) {
    double theta = to_radians(theta_flag, degrees);
    if (!std::isfinite(theta)) throw std::domain_error("--theta must be finite");
    cordic::Decomposition d = cordic::decompose(theta, max_steps, tolerance);
    std::string csv = "step,k,sign,residual\n";
    double residual = theta;
    char line[80];
    for (size_t i = 0; i < d.steps.size(); ++i) {
        residual -= d.steps[i].sign * std::atan(std::ldexp(1.0, -d.steps[i].k));
        std::snprintf(line, sizeof line, "%zu,%d,%+d,%.17g\n", i, d.steps[i].k, d.steps[i].sign,
                      residual);
        csv += line;
    }
    if (out_path.empty()) {
        std::fputs(csv.c_str(), stdout);  // pure CSV: pipeable
    } else {
        write_text(out_path, csv);
        std::printf("wrote %zu steps to %s\n", d.steps.size(), out_path.c_str());
        std::printf("final residual: %.6e\n", d.residual);
    }
    return 0;
}

int run_table(const std::string& layout_name, int samples, bool fixed,
              const std::string& out_path) {
    cordic::TableLayout layout = cordic::parse_layout(layout_name);
    cordic::SweepConfig config;
    config.samples = samples;
    config.domain = fixed ? cordic::Domain::Fixed : cordic::Domain::Float;
    if (layout == cordic::TableLayout::Orders)
        config.variants = {cordic::Variant::ProposedO3, cordic::Variant::ProposedO4,
                           cordic::Variant::ProposedO5};
    cordic::ErrorReport report = cordic::run_sweep(config);
    cordic::RenderedTable rendered = cordic::emit_table(report, layout);
    std::fputs(rendered.text.c_str(), stdout);
    if (!out_path.empty()) {
        write_text(out_path, rendered.csv);
        std::printf("wrote CSV to %s\n", out_path.c_str());
    }
    return 0;
}

int run_curve(const std::string& variant_name, int iterations, const std::string& function,
              int samples, bool fixed, const std::string& out_path) {
    cordic::Variant variant = cordic::parse_variant(variant_name);
    cordic::ErrFn fn;
    if (function == "sin")
        fn = cordic::ErrFn::Sin;
    else if (function == "cos")
        fn = cordic::ErrFn::Cos;
    else
        throw CLI::ValidationError("--function", "must be sin or cos");
    std::string csv = cordic::emit_curve(variant, iterations, fn, samples,
                                         fixed ? cordic::Domain::Fixed : cordic::Domain::Float);
    if (out_path.empty())
        std::fputs(csv.c_str(), stdout);
    else {
        write_text(out_path, csv);
        std::printf("wrote curve CSV to %s\n", out_path.c_str());
    }
    return 0;
}

int run_simulate(double theta_flag, bool degrees, int stages, const std::string& variant_name,
                 const std::string& trace_path) {
    double theta = to_radians(theta_flag, degrees);
    cordic::Variant variant = cordic::parse_variant(variant_name);
    cordic::Reduction red = cordic::reduce_argument(theta);
    cordic::Trace trace;
    cordic::PipelineResult pr = cordic::run_pipelined(
        {cordic::Q30Fixed::from_real(red.reduced)}, cordic::PipelineConfig{stages, true}, variant,
        &trace);
    cordic::Q30Fixed X = pr.outputs[0].first, Y = pr.outputs[0].second;
    auto [c, s] = cordic::reconstruct(red.octant, X.value(), Y.value());
    auto [ref_cos, ref_sin] = cordic::reference_sincos(theta);

    std::printf("theta: %.10f rad  (octant %d, reduced %.10f)\n", theta, red.octant, red.reduced);
    std::printf("stages: %d  variant: %s\n", stages, variant_name.c_str());
    std::printf("X: 0x%s  (%.10f)\n", cordic::to_hex(X).c_str(), X.value());
    std::printf("Y: 0x%s  (%.10f)\n", cordic::to_hex(Y).c_str(), Y.value());
    std::printf("cos: %.10f   abs error: %.4e\n", c, std::fabs(c - ref_cos));
    std::printf("sin: %.10f   abs error: %.4e\n", s, std::fabs(s - ref_sin));
    std::printf("latency: %d cycles   total: %ld cycles   throughput: %.0f result/cycle\n",
                pr.report.latency_cycles, pr.report.total_cycles,
                pr.report.results_per_cycle);
    if (!trace_path.empty()) {
        write_text(trace_path, cordic::trace_csv(trace));
        std::printf("wrote trace to %s\n", trace_path.c_str());
    }
    return 0;
}

int run_list_variants() {
    std::printf("%-14s %-42s %s\n", "id", "cos coefficient", "sin coefficient");
    std::printf("%-14s %-42s %s\n", "conventional", "exact (folded into scale constant K)",
                "tan = 2^-k, compensated by K");
    struct Row {
        cordic::Variant v;
        const char* c;
        const char* s;
    };
    const Row rows[] = {
        {cordic::Variant::CompetitorA, "1 - 2^-(2k+1)", "2^-k - 2^-(3k+3)"},
        {cordic::Variant::CompetitorB, "1 - 2^-(2k+1)", "2^-k - 2^-(3k+2)"},
        {cordic::Variant::ProposedO3, "1 - 2^-(2k+1)", "2^-k - 2^-(3k+1)"},
        {cordic::Variant::ProposedO4, "1 - 2^-(2k+1) + 3*2^-(4k+3)", "2^-k - 2^-(3k+1)"},
        {cordic::Variant::ProposedO5, "1 - 2^-(2k+1) + 3*2^-(4k+3)",
         "2^-k - 2^-(3k+1) + 3*2^-(5k+3)"},
    };
    for (const Row& r : rows)
        std::printf("%-14s %-42s %s\n", cordic::variant_id(r.v).c_str(), r.c, r.s);
    std::printf("\nvalues at k = 1:\n");
    for (const Row& r : rows) {
        cordic::MicroRotation m = cordic::coefficients(r.v, 1);
        std::printf("%-14s c = %-12.10f s = %.10f\n", cordic::variant_id(r.v).c_str(), m.c(),
                    m.s());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CORDIC toolkit: scale-free and conventional rotation-mode sin/cos"};
    app.require_subcommand(1);

    // compute
    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "evaluate sin/cos of an angle");
    compute->add_option("--theta", copt.theta, "angle (radians unless --degrees)")->required();
    compute->add_flag("--degrees", copt.degrees, "interpret --theta in degrees");
    compute->add_option("--variant", copt.variant, "coefficient scheme id")
        ->default_val("proposed-o3");
    compute->add_option("--iterations", copt.iterations, "micro-rotation count")
        ->default_val(4)
        ->check(CLI::Range(1, 32));
    compute->add_flag("--fixed", copt.fixed, "run the Q2.30 hardware datapath");

    // decompose
    double dz_theta = 0;
    bool dz_degrees = false;
    int dz_steps = 5;
    double dz_tol = 0;
    std::string dz_out;
    CLI::App* dec = app.add_subcommand("decompose", "greedy signed elementary-angle split");
    dec->add_option("--theta", dz_theta, "angle (radians unless --degrees)")->required();
    dec->add_flag("--degrees", dz_degrees, "interpret --theta in degrees");
    dec->add_option("--max-steps", dz_steps, "step budget")->default_val(5)->check(CLI::Range(1, 64));
    dec->add_option("--tolerance", dz_tol, "stop early when |residual| <= tolerance")
        ->default_val(0.0);
    dec->add_option("--out", dz_out, "write CSV here instead of stdout");

    // table
    std::string tb_layout;
    int tb_samples = 512;
    bool tb_fixed = false;
    std::string tb_out;
    CLI::App* tab = app.add_subcommand("table", "error comparison tables");
    tab->add_option("--layout", tb_layout, "methods-cos | methods-sin | orders")->required();
    tab->add_option("--samples", tb_samples, "grid points")->default_val(512)->check(CLI::Range(2, 1 << 20));
    tab->add_flag("--fixed", tb_fixed, "measure the Q2.30 datapath instead of float");
    tab->add_option("--out", tb_out, "also write CSV here");

    // curve
    std::string cv_variant = "proposed-o3", cv_fn = "sin", cv_out;
    int cv_iterations = 4, cv_samples = 512;
    bool cv_fixed = false;
    CLI::App* cur = app.add_subcommand("curve", "per-angle approximation/reference/difference CSV");
    cur->add_option("--variant", cv_variant, "coefficient scheme id")->default_val("proposed-o3");
    cur->add_option("--iterations", cv_iterations, "micro-rotation count")
        ->default_val(4)
        ->check(CLI::Range(1, 32));
    cur->add_option("--function", cv_fn, "sin | cos")->default_val("sin");
    cur->add_option("--samples", cv_samples, "grid points")->default_val(512)->check(CLI::Range(2, 1 << 20));
    cur->add_flag("--fixed", cv_fixed, "measure the Q2.30 datapath instead of float");
    cur->add_option("--out", cv_out, "write CSV here instead of stdout");

    // simulate
    double sm_theta = 0;
    bool sm_degrees = false;
    int sm_stages = 4;
    std::string sm_variant = "proposed-o3", sm_trace;
    CLI::App* sim = app.add_subcommand("simulate", "pipelined hardware run with cycle report");
    sim->add_option("--theta", sm_theta, "angle (radians unless --degrees)")->required();
    sim->add_flag("--degrees", sm_degrees, "interpret --theta in degrees");
    sim->add_option("--stages", sm_stages, "pipeline stage count")->default_val(4)->check(CLI::IsMember({3, 4}));
    sim->add_option("--variant", sm_variant, "coefficient scheme id")->default_val("proposed-o3");
    sim->add_option("--trace", sm_trace, "write per-clock trace CSV here");

    // rom-dump / list-variants
    CLI::App* rom = app.add_subcommand("rom-dump", "print the 32 arctangent ROM words");
    CLI::App* lsv = app.add_subcommand("list-variants", "print the coefficient schemes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) return run_compute(copt);
        if (dec->parsed()) return run_decompose(dz_theta, dz_degrees, dz_steps, dz_tol, dz_out);
        if (tab->parsed()) return run_table(tb_layout, tb_samples, tb_fixed, tb_out);
        if (cur->parsed())
            return run_curve(cv_variant, cv_iterations, cv_fn, cv_samples, cv_fixed, cv_out);
        if (sim->parsed()) return run_simulate(sm_theta, sm_degrees, sm_stages, sm_variant, sm_trace);
        if (rom->parsed()) {
            std::fputs(cordic::rom_dump().c_str(), stdout);
            return 0;
        }
        if (lsv->parsed()) return run_list_variants();
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
