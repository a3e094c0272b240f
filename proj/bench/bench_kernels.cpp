// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0
//
// Serial reference kernels versus their OpenMP counterparts, plus the Haar
// sampler. Run manually: build/bench/qscat_bench

#include <benchmark/benchmark.h>

#include "qscat/ensemble.hpp"
#include "qscat/figures.hpp"
#include "qscat/regions.hpp"

namespace {

void BM_RegionMapSerial(benchmark::State& state) {
    const qscat::RegionSpec spec{0.75, 0.75, static_cast<int>(state.range(0)), 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qscat::region_map_serial(spec));
    }
}
BENCHMARK(BM_RegionMapSerial)->Arg(101)->Arg(201);

void BM_RegionMapParallel(benchmark::State& state) {
    const qscat::RegionSpec spec{0.75, 0.75, static_cast<int>(state.range(0)), 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qscat::region_map(spec));
    }
}
BENCHMARK(BM_RegionMapParallel)->Arg(101)->Arg(201);

void BM_DiscordSurfaceSerial(benchmark::State& state) {
    const qscat::SurfaceSpec spec{1000.0, static_cast<int>(state.range(0)), false};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qscat::discord_surface_serial(spec));
    }
}
BENCHMARK(BM_DiscordSurfaceSerial)->Arg(101)->Arg(201);

void BM_DiscordSurfaceParallel(benchmark::State& state) {
    const qscat::SurfaceSpec spec{1000.0, static_cast<int>(state.range(0)), false};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qscat::discord_surface(spec));
    }
}
BENCHMARK(BM_DiscordSurfaceParallel)->Arg(101)->Arg(201);

void BM_MeanDiscordMcSerial(benchmark::State& state) {
    const qscat::EnsembleConfig cfg(static_cast<int>(state.range(0)), 10.0, 2000, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qscat::mean_discord_mc_serial(cfg));
    }
}
BENCHMARK(BM_MeanDiscordMcSerial)->Arg(4)->Arg(16);

void BM_MeanDiscordMcParallel(benchmark::State& state) {
    const qscat::EnsembleConfig cfg(static_cast<int>(state.range(0)), 10.0, 2000, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qscat::mean_discord_mc(cfg));
    }
}
BENCHMARK(BM_MeanDiscordMcParallel)->Arg(4)->Arg(16);

void BM_HaarRandom(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qscat::haar_random(static_cast<int>(state.range(0)), ++seed));
    }
}
BENCHMARK(BM_HaarRandom)->Arg(4)->Arg(16)->Arg(64);

} // namespace

BENCHMARK_MAIN();
