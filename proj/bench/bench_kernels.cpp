// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "wormbound/bounds.hpp"
#include "wormbound/conjecture.hpp"
#include "wormbound/reference.hpp"
#include "wormbound/search.hpp"

namespace {

using namespace wormbound;

Stage small_stage() {
    return {{{0.64, 0.68}, {0.17, 0.21}, {1.29, 1.33}, {0.73, 0.76}, {0.11, 0.14}, {1.62, 1.66}}, 0.005, 0.005};
}

void BM_GridSearchParallel(benchmark::State& state) {
    const Stage st = small_stage();
    for (auto _ : state) benchmark::DoNotOptimize(grid_search(st));
}
BENCHMARK(BM_GridSearchParallel)->Unit(benchmark::kMillisecond);

void BM_GridSearchParallelUnpruned(benchmark::State& state) {
    const Stage st = small_stage();
    GridSearchOptions opt;
    opt.area_prune = false;
    opt.bound_prune = false;
    for (auto _ : state) benchmark::DoNotOptimize(grid_search(st, nullptr, opt));
}
BENCHMARK(BM_GridSearchParallelUnpruned)->Unit(benchmark::kMillisecond);

void BM_GridSearchSerialReference(benchmark::State& state) {
    const Stage st = small_stage();
    for (auto _ : state) benchmark::DoNotOptimize(reference::grid_search(st));
}
BENCHMARK(BM_GridSearchSerialReference)->Unit(benchmark::kMillisecond);

void BM_CertifyFullGridParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(certify_theorem(0.2274, CertifyMethod::FullGrid, {1e-3, 0}));
}
BENCHMARK(BM_CertifyFullGridParallel)->Unit(benchmark::kMillisecond);

void BM_CertifyFullGridSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::certify_theorem(0.2274, CertifyMethod::FullGrid, {1e-3, 0}));
    }
}
BENCHMARK(BM_CertifyFullGridSerial)->Unit(benchmark::kMillisecond);

void BM_CertifyBnbParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(certify_theorem(0.227498, CertifyMethod::BranchAndBound));
}
BENCHMARK(BM_CertifyBnbParallel)->Unit(benchmark::kMillisecond);

void BM_CertifyBnbSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::certify_theorem(0.227498, CertifyMethod::BranchAndBound));
    }
}
BENCHMARK(BM_CertifyBnbSerial)->Unit(benchmark::kMillisecond);

void BM_PivotConfigMu(benchmark::State& state) {
    const PivotParams p{2.16, 3.66};
    for (auto _ : state) benchmark::DoNotOptimize(mu(pivot_config(p)));
}
BENCHMARK(BM_PivotConfigMu);

}  // namespace

BENCHMARK_MAIN();
