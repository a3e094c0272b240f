// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#include "qscat/ensemble.hpp"

#include <cmath>

#include "qscat/seeding.hpp"

namespace qscat {

namespace {

double mc_trial(const EnsembleConfig& cfg, int trial) {
    const ScatteringMatrix s =
        haar_random(cfg.channels, derive_seed(cfg.master_seed, static_cast<std::uint64_t>(trial)));
    const TwoModeCovariance sigma =
        output_covariance(make_thermal(cfg.n_bar), s, ModePair(0, 0, 1));
    return gaussian_discord(standard_form(sigma), MeasuredMode::First);
}

/// Mean and standard error accumulated in trial-index order (two passes), so
/// the result is independent of how the values were produced.
EnsembleStat reduce(const std::vector<double>& values) {
    const long n = static_cast<long>(values.size());
    double sum = 0.0;
    for (const double v : values) {
        sum += v;
    }
    const double mean = sum / static_cast<double>(n);
    if (n < 2) {
        return {mean, 0.0, n};
    }
    double ss = 0.0;
    for (const double v : values) {
        const double d = v - mean;
        ss += d * d;
    }
    const double variance = ss / static_cast<double>(n - 1);
    return {mean, std::sqrt(variance / static_cast<double>(n)), n};
}

} // namespace

EnsembleConfig::EnsembleConfig(int channels_in, double n_bar_in, int trials_in,
                               std::uint64_t master_seed_in)
    : channels(channels_in), n_bar(n_bar_in), trials(trials_in),
      master_seed(master_seed_in) {
    if (channels < 2) {
        throw InvalidDimension("ensemble needs at least two channels");
    }
    if (!(n_bar >= 0.0)) {
        throw OutOfRange("thermal mean photon number must be >= 0");
    }
    if (trials < 1) {
        throw OutOfRange("trial count must be >= 1");
    }
}

double mean_discord_analytic(double n_bar, int channels) {
    if (channels < 2) {
        throw InvalidDimension("ensemble needs at least two channels");
    }
    if (!(n_bar >= 0.0)) {
        throw OutOfRange("thermal mean photon number must be >= 0");
    }
    const double nd = static_cast<double>(channels);
    const double diag = n_bar / nd + kVacuumVariance;
    const double cross = n_bar / (4.0 * nd * nd); // squared mean amplitude 1/(2N)
    return gaussian_discord({diag, diag, cross, cross}, MeasuredMode::First);
}

EnsembleStat mean_discord_mc(const EnsembleConfig& cfg) {
    std::vector<double> values(static_cast<std::size_t>(cfg.trials));
#pragma omp parallel for schedule(dynamic, 16)
    for (int trial = 0; trial < cfg.trials; ++trial) {
        values[static_cast<std::size_t>(trial)] = mc_trial(cfg, trial);
    }
    return reduce(values);
}

EnsembleStat mean_discord_mc_serial(const EnsembleConfig& cfg) {
    std::vector<double> values(static_cast<std::size_t>(cfg.trials));
    for (int trial = 0; trial < cfg.trials; ++trial) {
        values[static_cast<std::size_t>(trial)] = mc_trial(cfg, trial);
    }
    return reduce(values);
}

std::vector<SweepPoint> sweep_fig4(const std::vector<double>& n_bar_grid,
                                   const std::vector<int>& channel_grid,
                                   SweepMethod method,
                                   int trials,
                                   std::uint64_t master_seed) {
    if (n_bar_grid.empty() || channel_grid.empty()) {
        throw OutOfRange("sweep grids must be non-empty");
    }
    std::vector<SweepPoint> rows;
    rows.reserve(n_bar_grid.size() * channel_grid.size());
    std::uint64_t row_index = 0;
    for (const double n_bar : n_bar_grid) {
        for (const int channels : channel_grid) {
            if (method == SweepMethod::Analytic) {
                rows.push_back({n_bar, channels,
                                mean_discord_analytic(n_bar, channels), 0.0, false});
            } else {
                const EnsembleConfig cfg(channels, n_bar, trials,
                                         derive_seed(master_seed, row_index));
                const EnsembleStat stat = mean_discord_mc(cfg);
                rows.push_back({n_bar, channels, stat.mean, stat.std_error, true});
            }
            ++row_index;
        }
    }
    return rows;
}

} // namespace qscat
