// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace qscat {

/// splitmix64 finalizer. Used as the seed-splitting hash so that parallel
/// work items draw from statistically independent streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for work item `index` derived from `master`. This is the single
/// splitting rule of the codebase: results of any parallel sweep depend only
/// on (master, index), never on the execution schedule.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return splitmix64(master ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

} // namespace qscat
