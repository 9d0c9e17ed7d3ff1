// Parallel production engine against the serial reference engine.
//
//   ./build/bench/bench_volume
//   OMP_NUM_THREADS=8 ./build/bench/bench_volume --benchmark_filter=Parallel

#include "hkfs/volume.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

const std::vector<hkfs::ExponentData>& inputs() {
    static const std::vector<hkfs::ExponentData> d{
        {{1}, {1}},
        {{3}, {2}},
        {{2}, {5}},
        {{1, 1}, {1, 1}},
        {{5, 2}, {2, 3}},
    };
    return d;
}

template <bool Parallel>
void BM_HilbertKunz(benchmark::State& state) {
    const auto& data = inputs()[static_cast<std::size_t>(state.range(0))];
    const auto region = hkfs::hk_region(data);
    hkfs::ShannonStats stats;
    for (auto _ : state) {
        stats = {};
        auto v = Parallel ? hkfs::region_volume(region, &stats) : hkfs::reference::region_volume(region, &stats);
        benchmark::DoNotOptimize(v);
    }
    state.counters["cells"] = static_cast<double>(stats.cells);
    state.counters["nodes"] = static_cast<double>(stats.nodes);
}

void BM_FSignature(benchmark::State& state) {
    const auto& data = inputs()[static_cast<std::size_t>(state.range(0))];
    const auto region = hkfs::fsig_region(data);
    for (auto _ : state) benchmark::DoNotOptimize(hkfs::region_volume(region));
}

}  // namespace

BENCHMARK(BM_HilbertKunz<true>)->Name("Parallel/HK")->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
// (5,2;2,3) takes tens of seconds on the reference path and is left out.
BENCHMARK(BM_HilbertKunz<false>)->Name("Reference/HK")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FSignature)->Name("Parallel/FSig")->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
