// Reference (serial, one oracle call per character) versus Parallel (OpenMP cells,
// one Gauss-sum product per Galois orbit) kernels on the verification suites.

#include <benchmark/benchmark.h>

#include "rootnum/sweeps.hpp"

using namespace rootnum::verify;

namespace {

Kernel kernel_of(const benchmark::State& state) { return state.range(1) == 0 ? Kernel::Reference : Kernel::Parallel; }

void label(benchmark::State& state, const SuiteResult& r) {
    state.counters["checked"] = static_cast<double>(r.checked);
    state.SetLabel(state.range(1) == 0 ? "reference" : "parallel");
}

void BM_Abelian(benchmark::State& state) {
    const int degrees[] = {1, 2};
    SuiteResult r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = verify_abelian(state.range(0), degrees, kernel_of(state)));
    label(state, r);
}
BENCHMARK(BM_Abelian)->ArgsProduct({{13, 23, 31}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Induced(benchmark::State& state) {
    SuiteResult r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = verify_induced(state.range(0), kernel_of(state)));
    label(state, r);
}
BENCHMARK(BM_Induced)->ArgsProduct({{13, 31}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Gauss(benchmark::State& state) {
    SuiteResult r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = verify_gauss(state.range(0), kernel_of(state)));
    label(state, r);
}
BENCHMARK(BM_Gauss)->ArgsProduct({{64, 121}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EvenDimension(benchmark::State& state) {
    const std::int64_t dims[] = {2, 4};
    SuiteResult r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = verify_even_dimension(state.range(0), dims, 1, 100, kernel_of(state)));
    label(state, r);
}
BENCHMARK(BM_EvenDimension)->ArgsProduct({{100}, {0, 1}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
