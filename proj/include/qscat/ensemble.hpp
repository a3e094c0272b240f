// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "qscat/measures.hpp"
#include "qscat/scatter.hpp"

namespace qscat {

/// Monte Carlo ensemble parameters. Throws OutOfRange / InvalidDimension on
/// construction when out of domain.
struct EnsembleConfig {
    EnsembleConfig(int channels_in, double n_bar_in, int trials_in,
                   std::uint64_t master_seed_in);

    int channels;
    double n_bar;
    int trials;
    std::uint64_t master_seed;
};

struct EnsembleStat {
    double mean = 0.0;
    double std_error = 0.0;
    long trials = 0;
};

/// Typical-value discord of an output pair after averaging the scattering
/// statistics analytically: every |S|^2 is replaced by its ensemble mean 1/N
/// and the cross modulus product |S_l||S_m| by the squared mean amplitude
/// (1/(2N))^2, taken from the flat-energy relation <|S|^2> = 2<|S|>. The
/// resulting thermal standard form (n/N + 1/2, n/N + 1/2, n/(4N^2), .) is fed
/// to gaussian_discord. See the README for how this relates to the Monte
/// Carlo estimate.
double mean_discord_analytic(double n_bar, int channels);

/// Monte Carlo mean discord: per trial draw S from the Haar ensemble with
/// seed derive_seed(master_seed, trial), send a thermal state into channel 0,
/// and evaluate the discord of output pair (0, 1) measured on the first mode.
/// Deterministic for a fixed master seed regardless of the parallel schedule:
/// trial values are accumulated in index order.
EnsembleStat mean_discord_mc(const EnsembleConfig& cfg);

/// Serial reference implementation (identical results, no threading).
EnsembleStat mean_discord_mc_serial(const EnsembleConfig& cfg);

enum class SweepMethod { Analytic, MonteCarlo };

struct SweepPoint {
    double n_bar;
    int channels;
    double mean_discord;
    double std_error;    ///< meaningful only when has_std_error
    bool has_std_error;
};

/// Row-major sweep over (n_bar, channels) grids. Monte Carlo cells run with
/// master seed derive_seed(master_seed, row_index) so rows are independent
/// and the full table is reproducible.
std::vector<SweepPoint> sweep_fig4(const std::vector<double>& n_bar_grid,
                                   const std::vector<int>& channel_grid,
                                   SweepMethod method,
                                   int trials,
                                   std::uint64_t master_seed);

} // namespace qscat
