// Serial and OpenMP versions of the two parallel kernels on growing inputs.
#include <benchmark/benchmark.h>

#include "divlink/cli.hpp"
#include "divlink/diagram.hpp"

namespace {

using divlink::Exec;

divlink::StrandSet sample(int size) {
    divlink::RandomOptions o;
    o.size = size;
    o.max_attempts = 100000;
    return divlink::random_divide(7, o);
}

void intersect(benchmark::State& state, Exec exec) {
    const auto s = divlink::chain_divide(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(divlink::intersect_strands(s, exec));
}

void oracle(benchmark::State& state, Exec exec) {
    const auto l = divlink::lift(sample(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(divlink::gauss_linking_oracle(l, exec));
}

} // namespace

BENCHMARK_CAPTURE(intersect, serial, Exec::Serial)->RangeMultiplier(2)->Range(8, 256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(intersect, parallel, Exec::Parallel)->RangeMultiplier(2)->Range(8, 256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(oracle, serial, Exec::Serial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(oracle, parallel, Exec::Parallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
