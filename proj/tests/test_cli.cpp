// SPDX-License-Identifier: MIT
//
// End-to-end tests of the command-line binary: spawn it, capture stdout and
// the exit status, and check the documented contract (output fields, CSV
// shapes, exit codes 0/1/2).

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CORDIC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string temp_path(const char* name) {
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("exit codes follow the 0/1/2 contract", "[cli]") {
    CHECK(run_cli("compute --theta 0").exit_code == 0);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("compute --help").exit_code == 0);

    // Usage errors: missing subcommand, unknown flag, unknown variant,
    // out-of-range iteration count, bad layout.
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("compute").exit_code == 2);            // --theta is required
    CHECK(run_cli("compute --theta 0 --bogus").exit_code == 2);
    CHECK(run_cli("compute --theta 0 --variant nope").exit_code == 2);
    CHECK(run_cli("compute --theta 0 --iterations 40").exit_code == 2);
    CHECK(run_cli("table --layout bogus").exit_code == 2);
    CHECK(run_cli("simulate --theta 0 --stages 9").exit_code == 2);
    CHECK(run_cli("curve --function tan").exit_code == 2);

    // Domain errors in otherwise well-formed invocations.
    CHECK(run_cli("compute --theta inf").exit_code == 1);
    CHECK(run_cli("decompose --theta inf").exit_code == 1);
}

TEST_CASE("compute prints values, reference, and errors", "[cli]") {
    RunResult r = run_cli("compute --theta 0");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("cos: 1.0000000000") != std::string::npos);
    CHECK(r.out.find("sin: 0.0000000000") != std::string::npos);
    CHECK(r.out.find("variant: proposed-o3  iterations: 4") != std::string::npos);
    CHECK(r.out.find("octant 0") != std::string::npos);

    // 45 degrees = pi/4; the cos/sin columns approach 0.7071.
    RunResult deg = run_cli("compute --theta 45 --degrees --variant conventional --iterations 32");
    REQUIRE(deg.exit_code == 0);
    CHECK(deg.out.find("theta: 0.7853981634") != std::string::npos);
    CHECK(deg.out.find("cos: 0.70710678") != std::string::npos);
    CHECK(deg.out.find("sin: 0.70710678") != std::string::npos);

    // Fixed mode adds the hardware words and the cycle count.
    RunResult fx = run_cli("compute --theta 0 --fixed");
    REQUIRE(fx.exit_code == 0);
    CHECK(fx.out.find("X: 0x40000000") != std::string::npos);
    CHECK(fx.out.find("Y: 0x00000000") != std::string::npos);
    CHECK(fx.out.find("cycles: 6") != std::string::npos);

    // Reduction handles angles far outside the principal range.
    RunResult big = run_cli("compute --theta 10 --variant conventional --iterations 32");
    REQUIRE(big.exit_code == 0);
    CHECK(big.out.find("cos: -0.83907152") != std::string::npos);
    CHECK(big.out.find("sin: -0.54402111") != std::string::npos);
}

TEST_CASE("decompose emits a step CSV", "[cli]") {
    // pi/8 = 0.39269908...: the five-step worked sequence.
    RunResult r = run_cli("decompose --theta 0.39269908169872414 --max-steps 5");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "step,k,sign,residual");
    CHECK(lines[1].substr(0, 6) == "0,1,+1");
    CHECK(lines[2].substr(0, 6) == "1,4,-1");
    CHECK(lines[3].substr(0, 6) == "2,7,-1");
    CHECK(lines[4].substr(0, 7) == "3,10,-1");
    CHECK(lines[5].substr(0, 7) == "4,12,+1");

    std::string path = temp_path("decompose.csv");
    RunResult w = run_cli("decompose --theta 0.1 --max-steps 6 --out " + path);
    REQUIRE(w.exit_code == 0);
    CHECK(w.out.find("wrote 6 steps") != std::string::npos);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "step,k,sign,residual");
    std::remove(path.c_str());
}

TEST_CASE("table prints text and writes CSV", "[cli]") {
    std::string path = temp_path("table.csv");
    RunResult r = run_cli("table --layout methods-sin --samples 128 --out " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("sin mean squared error") != std::string::npos);
    CHECK(r.out.find("competitor-a") != std::string::npos);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "variant,iterations,function,mse,max_abs");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 9);
    std::remove(path.c_str());

    RunResult orders = run_cli("table --layout orders --samples 128");
    REQUIRE(orders.exit_code == 0);
    CHECK(orders.out.find("proposed-o5") != std::string::npos);
}

TEST_CASE("curve streams per-angle CSV", "[cli]") {
    RunResult r = run_cli("curve --variant proposed-o3 --iterations 4 --function sin --samples 64");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 65);
    CHECK(lines[0] == "theta,approx,reference,difference");
    CHECK(lines[1] == "0,0,0,0");
}

TEST_CASE("simulate reports the pipeline run", "[cli]") {
    RunResult r = run_cli("simulate --theta 0 --stages 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("X: 0x40000000") != std::string::npos);
    CHECK(r.out.find("Y: 0x00000000") != std::string::npos);
    CHECK(r.out.find("latency: 5 cycles") != std::string::npos);

    std::string path = temp_path("trace.csv");
    RunResult t = run_cli("simulate --theta 0.3 --stages 4 --trace " + path);
    REQUIRE(t.exit_code == 0);
    CHECK(t.out.find("latency: 6 cycles") != std::string::npos);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "cycle,phase,k,sign,x_hex,y_hex,z_hex");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 6);  // row count equals the latency
    std::remove(path.c_str());
}

TEST_CASE("rom-dump prints the full table", "[cli]") {
    RunResult r = run_cli("rom-dump");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 32);
    CHECK(lines[0] == "3243F6A8");
    CHECK(lines[24] == "0000003F");
    CHECK(lines[31] == "00000000");
}

TEST_CASE("list-variants names every scheme", "[cli]") {
    RunResult r = run_cli("list-variants");
    REQUIRE(r.exit_code == 0);
    for (const char* id : {"conventional", "competitor-a", "competitor-b", "proposed-o3",
                           "proposed-o4", "proposed-o5"})
        CHECK(r.out.find(id) != std::string::npos);
    CHECK(r.out.find("2^-k - 2^-(3k+1)") != std::string::npos);
}
