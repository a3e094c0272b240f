// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line tool: exit codes, output formats and
// byte-level determinism.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(QSCAT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

} // namespace

TEST_CASE("simulate coherent input reports no correlations") {
    const RunResult res =
        run_cli("simulate --state coherent --n 8 --seed 1 --pair 0 1");
    CHECK(res.exit_code == 0);
    CHECK(first_line(res.output) ==
          "c_value,physical,separable,eta_tilde_minus,discord_measured_on_l,"
          "discord_measured_on_m");
    const std::string row = res.output.substr(res.output.find('\n') + 1);
    CHECK(row == "1,true,true,0.5,0,0\n");
}

TEST_CASE("simulate thermal input is separable but discordant") {
    const RunResult res =
        run_cli("simulate --state thermal --nbar 1 --n 6 --seed 3 --pair 0 1 "
                "--format json");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"separable\": true") != std::string::npos);
    CHECK(res.output.find("\"physical\": true") != std::string::npos);
    // discord must be strictly positive for open channels
    CHECK(res.output.find("\"discord_measured_on_l\": 0.0") == std::string::npos);
    CHECK(res.output.find("\"discord_measured_on_l\": 0,") == std::string::npos);
}

TEST_CASE("simulate squeezed input is entangled") {
    const RunResult res =
        run_cli("simulate --state squeezed --r 0.5 --theta 0 --n 4 --seed 2 "
                "--pair 0 1 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"separable\": false") != std::string::npos);
}

TEST_CASE("occupied input channel is selectable") {
    const RunResult a =
        run_cli("simulate --state thermal --nbar 2 --n 5 --seed 4 --kprime 0 --pair 1 2");
    const RunResult b =
        run_cli("simulate --state thermal --nbar 2 --n 5 --seed 4 --kprime 3 --pair 1 2");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    // same draw, different column: different transmissions, different report
    CHECK(a.output != b.output);
}

TEST_CASE("exit code 2 on validation failures") {
    CHECK(run_cli("fig2 --alpha 0.4 --beta 0.75").exit_code == 2);
    CHECK(run_cli("simulate --state thermal --nbar -3 --n 4").exit_code == 2);
    CHECK(run_cli("simulate --state coherent --n 4 --pair 2 2").exit_code == 2);
    CHECK(run_cli("simulate --state coherent --n 4 --pair 0 7").exit_code == 2);
    CHECK(run_cli("fig4 --method mc").exit_code == 2); // missing grids
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("exit code 3 on numerical domain failures") {
    // r large enough to overflow the hyperbolic moments: construction fails
    // inside the library, not in flag validation
    const RunResult res =
        run_cli("simulate --state squeezed --r 400 --n 4 --pair 0 1");
    CHECK(res.exit_code == 3);
}

TEST_CASE("fig2 emits the classification map") {
    const RunResult res = run_cli("fig2 --alpha 0.75 --beta 0.75 --resolution 21");
    CHECK(res.exit_code == 0);
    CHECK(first_line(res.output) == "gamma_x,gamma_p,class,c_value");
    // origin row: gamma_x = gamma_p = 0, separable, C = 1
    CHECK(res.output.find("0,0,Separable,1\n") != std::string::npos);
    CHECK(res.output.find("Entangled") != std::string::npos);
}

TEST_CASE("fig3 grid is monotone along the measured axis") {
    const RunResult res = run_cli("fig3 --nbar 1 --resolution 11");
    CHECK(res.exit_code == 0);
    CHECK(first_line(res.output) == "t_l,t_m,discord");
    // 11 x 11 grid plus header
    int lines = 0;
    for (const char c : res.output) {
        lines += c == '\n';
    }
    CHECK(lines == 122);

    const RunResult masked = run_cli("fig3 --nbar 1 --resolution 11 --physical-only");
    int masked_lines = 0;
    for (const char c : masked.output) {
        masked_lines += c == '\n';
    }
    CHECK(masked_lines < lines);
}

TEST_CASE("fig4 analytic table") {
    const RunResult res =
        run_cli("fig4 --nbar-grid 0 --n-grid 2,4,8 --method analytic");
    CHECK(res.exit_code == 0);
    std::istringstream in(res.output);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n_bar,N,mean_discord,std_error");
    while (std::getline(in, line)) {
        // vacuum input: zero discord everywhere, empty error column
        CHECK(line.substr(line.size() - 3) == ",0,");
    }
}

TEST_CASE("identical flags produce byte-identical files") {
    const std::string out_a = "/tmp/qscat_cli_test_a.csv";
    const std::string out_b = "/tmp/qscat_cli_test_b.csv";
    const std::string flags =
        "fig4 --nbar-grid 1,10 --n-grid 2,4 --method mc --trials 300 --seed 11 --out ";
    CHECK(run_cli(flags + out_a).exit_code == 0);
    CHECK(run_cli(flags + out_b).exit_code == 0);

    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = slurp(out_a);
    CHECK(!a.empty());
    CHECK(a == slurp(out_b));
    std::remove(out_a.c_str());
    std::remove(out_b.c_str());
}
