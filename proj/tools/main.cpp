// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: single-shot simulation of one scattered mode pair
// plus the three figure-data sweeps (state-class map, thermal discord
// surface, mean-discord table).
//
// Exit codes: 0 success, 2 usage/validation failure, 3 numerical domain error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qscat/figures.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct CommonFlags {
    std::string out_path;
    std::string format = "csv";
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--out", flags.out_path, "Output path (default: stdout)");
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--seed", flags.seed, "Random seed")->capture_default_str();
}

qscat::OutputFormat parse_format(const CommonFlags& flags) {
    return flags.format == "json" ? qscat::OutputFormat::Json
                                  : qscat::OutputFormat::Csv;
}

int emit(const CommonFlags& flags,
         const std::function<void(std::ostream&, qscat::OutputFormat)>& writer) {
    const qscat::OutputFormat format = parse_format(flags);
    if (flags.out_path.empty()) {
        writer(std::cout, format);
        return 0;
    }
    std::ofstream out(flags.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << flags.out_path << "'\n";
        return kExitUsage;
    }
    writer(out, format);
    return 0;
}

struct SimulateFlags {
    CommonFlags common;
    std::string state;
    int channels = 8;
    int k_prime = 0;
    std::vector<int> pair{0, 1};
    double amp_re = 0.0;
    double amp_im = 0.0;
    double n_bar = 0.0;
    double r = 0.0;
    double theta = 0.0;
};

struct Fig2Flags {
    CommonFlags common;
    double alpha = 0.75;
    double beta = 0.75;
    int resolution = 201;
    double extent = 0.0;
};

struct Fig3Flags {
    CommonFlags common;
    double n_bar = 1.0;
    int resolution = 101;
    bool physical_only = false;
};

struct Fig4Flags {
    CommonFlags common;
    std::vector<double> n_bar_grid;
    std::vector<int> channel_grid;
    std::string method = "analytic";
    int trials = 10000;
};

int run_simulate(const SimulateFlags& flags) {
    if (flags.channels < 2) {
        std::cerr << "error: --n must be >= 2 for a two-mode analysis\n";
        return kExitUsage;
    }
    if (flags.pair.size() != 2 || flags.pair[0] == flags.pair[1]) {
        std::cerr << "error: --pair needs two distinct output mode indices\n";
        return kExitUsage;
    }
    const int l = flags.pair[0];
    const int m = flags.pair[1];
    if (l < 0 || m < 0 || l >= flags.channels || m >= flags.channels ||
        flags.k_prime < 0 || flags.k_prime >= flags.channels) {
        std::cerr << "error: mode indices must lie in [0, N)\n";
        return kExitUsage;
    }

    qscat::GaussianInput state;
    if (flags.state == "coherent") {
        state = qscat::make_coherent({flags.amp_re, flags.amp_im});
    } else if (flags.state == "thermal") {
        if (flags.n_bar < 0.0) {
            std::cerr << "error: --nbar must be >= 0\n";
            return kExitUsage;
        }
        state = qscat::make_thermal(flags.n_bar);
    } else {
        if (flags.r < 0.0) {
            std::cerr << "error: --r must be >= 0\n";
            return kExitUsage;
        }
        state = qscat::make_squeezed(flags.r, flags.theta);
    }

    const qscat::ScatteringMatrix s =
        qscat::haar_random(flags.channels, flags.common.seed);
    const qscat::TwoModeCovariance sigma =
        qscat::output_covariance(state, s, qscat::ModePair(flags.k_prime, l, m));
    const qscat::CorrelationReport report = qscat::analyze_pair(sigma);
    return emit(flags.common, [&](std::ostream& out, qscat::OutputFormat fmt) {
        qscat::write_report(out, report, fmt);
    });
}

int run_fig2(const Fig2Flags& flags) {
    if (flags.alpha < 0.5 || flags.beta < 0.5) {
        std::cerr << "error: --alpha and --beta must be >= 0.5\n";
        return kExitUsage;
    }
    if (flags.resolution < 2) {
        std::cerr << "error: --resolution must be >= 2\n";
        return kExitUsage;
    }
    if (flags.extent < 0.0) {
        std::cerr << "error: --extent must be >= 0\n";
        return kExitUsage;
    }
    const qscat::RegionGrid grid = qscat::region_map(
        {flags.alpha, flags.beta, flags.resolution, flags.extent});
    return emit(flags.common, [&](std::ostream& out, qscat::OutputFormat fmt) {
        qscat::write_region(out, grid, fmt);
    });
}

int run_fig3(const Fig3Flags& flags) {
    if (flags.n_bar < 0.0) {
        std::cerr << "error: --nbar must be >= 0\n";
        return kExitUsage;
    }
    if (flags.resolution < 2) {
        std::cerr << "error: --resolution must be >= 2\n";
        return kExitUsage;
    }
    const qscat::SurfaceGrid grid = qscat::discord_surface(
        {flags.n_bar, flags.resolution, flags.physical_only});
    return emit(flags.common, [&](std::ostream& out, qscat::OutputFormat fmt) {
        qscat::write_surface(out, grid, fmt);
    });
}

int run_fig4(const Fig4Flags& flags) {
    if (flags.n_bar_grid.empty() || flags.channel_grid.empty()) {
        std::cerr << "error: --nbar-grid and --n-grid must be non-empty\n";
        return kExitUsage;
    }
    for (const double v : flags.n_bar_grid) {
        if (v < 0.0) {
            std::cerr << "error: photon numbers must be >= 0\n";
            return kExitUsage;
        }
    }
    for (const int n : flags.channel_grid) {
        if (n < 2) {
            std::cerr << "error: channel counts must be >= 2\n";
            return kExitUsage;
        }
    }
    if (flags.trials < 1) {
        std::cerr << "error: --trials must be >= 1\n";
        return kExitUsage;
    }
    const qscat::SweepMethod method = flags.method == "mc"
                                          ? qscat::SweepMethod::MonteCarlo
                                          : qscat::SweepMethod::Analytic;
    const std::vector<qscat::SweepPoint> rows =
        qscat::sweep_fig4(flags.n_bar_grid, flags.channel_grid, method,
                          flags.trials, flags.common.seed);
    return emit(flags.common, [&](std::ostream& out, qscat::OutputFormat fmt) {
        qscat::write_sweep(out, rows, fmt);
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Correlations between output modes of Gaussian light scattered by a "
        "random lossless medium"};
    app.require_subcommand(1);

    SimulateFlags sim;
    CLI::App* simulate =
        app.add_subcommand("simulate", "Analyze one output mode pair of a random draw");
    simulate->add_option("--state", sim.state, "Input state family")
        ->required()
        ->check(CLI::IsMember({"coherent", "thermal", "squeezed"}));
    simulate->add_option("--n", sim.channels, "Channel count N")->capture_default_str();
    simulate->add_option("--kprime", sim.k_prime, "Occupied input channel")
        ->capture_default_str();
    simulate->add_option("--pair", sim.pair, "Output mode pair l m")
        ->expected(2);
    simulate->add_option("--amp-re", sim.amp_re, "Coherent amplitude, real part");
    simulate->add_option("--amp-im", sim.amp_im, "Coherent amplitude, imaginary part");
    simulate->add_option("--nbar", sim.n_bar, "Thermal mean photon number");
    simulate->add_option("--r", sim.r, "Squeezing parameter");
    simulate->add_option("--theta", sim.theta, "Squeezing phase (radians)");
    add_common(simulate, sim.common);

    Fig2Flags fig2;
    CLI::App* fig2_cmd =
        app.add_subcommand("fig2", "State-class map over the cross-correlation plane");
    fig2_cmd->add_option("--alpha", fig2.alpha, "First-mode variance")->required();
    fig2_cmd->add_option("--beta", fig2.beta, "Second-mode variance")->required();
    fig2_cmd->add_option("--resolution", fig2.resolution, "Grid points per axis")
        ->capture_default_str();
    fig2_cmd->add_option("--extent", fig2.extent,
                         "Half-width of the gamma grid (0 = auto)");
    add_common(fig2_cmd, fig2.common);

    Fig3Flags fig3;
    CLI::App* fig3_cmd = app.add_subcommand(
        "fig3", "Thermal discord surface over transmission moduli");
    fig3_cmd->add_option("--nbar", fig3.n_bar, "Thermal mean photon number")->required();
    fig3_cmd->add_option("--resolution", fig3.resolution, "Grid points per axis")
        ->capture_default_str();
    fig3_cmd->add_flag("--physical-only", fig3.physical_only,
                       "Mask cells with t_l^2 + t_m^2 > 1");
    add_common(fig3_cmd, fig3.common);

    Fig4Flags fig4;
    CLI::App* fig4_cmd =
        app.add_subcommand("fig4", "Mean discord versus photon number and channel count");
    fig4_cmd->add_option("--nbar-grid", fig4.n_bar_grid, "Photon-number grid")
        ->required()
        ->delimiter(',');
    fig4_cmd->add_option("--n-grid", fig4.channel_grid, "Channel-count grid")
        ->required()
        ->delimiter(',');
    fig4_cmd->add_option("--method", fig4.method, "Averaging method")
        ->check(CLI::IsMember({"analytic", "mc"}))
        ->capture_default_str();
    fig4_cmd->add_option("--trials", fig4.trials, "Monte Carlo trials per cell")
        ->capture_default_str();
    add_common(fig4_cmd, fig4.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(sim);
        }
        if (fig2_cmd->parsed()) {
            return run_fig2(fig2);
        }
        if (fig3_cmd->parsed()) {
            return run_fig3(fig3);
        }
        return run_fig4(fig4);
    } catch (const qscat::Error& e) {
        std::cerr << e.name() << ": " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
