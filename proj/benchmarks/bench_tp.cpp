#include <benchmark/benchmark.h>

#include "rootloci/thom.hpp"

using namespace rootloci;

namespace {

// hook shape (1^{d-3}, 3): two blocks, moderate codimension
Partition hook(int d) {
    std::vector<int> parts(d - 3, 1);
    parts.push_back(3);
    return Partition(std::move(parts));
}

void BM_reduce_hook(benchmark::State& state) {
    Partition p = hook(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tp_reduce(p));
}

void BM_naive_hook(benchmark::State& state) {
    Partition p = hook(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tp_naive(p));
}

void BM_sum_hook(benchmark::State& state) {
    Partition p = hook(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tp_sum(p));
}

// full table: every partition of d
void BM_reduce_table(benchmark::State& state) {
    auto ps = partitions_of(int(state.range(0)));
    for (auto _ : state)
        for (const Partition& p : ps) benchmark::DoNotOptimize(tp_reduce(p));
}

void BM_naive_table(benchmark::State& state) {
    auto ps = partitions_of(int(state.range(0)));
    for (auto _ : state)
        for (const Partition& p : ps) benchmark::DoNotOptimize(tp_naive(p));
}

void BM_sum_table(benchmark::State& state) {
    auto ps = partitions_of(int(state.range(0)));
    for (auto _ : state)
        for (const Partition& p : ps) benchmark::DoNotOptimize(tp_sum(p));
}

}  // namespace

BENCHMARK(BM_reduce_hook)->DenseRange(6, 12, 2);
BENCHMARK(BM_naive_hook)->DenseRange(6, 12, 2);
BENCHMARK(BM_sum_hook)->DenseRange(6, 12, 2);
BENCHMARK(BM_reduce_table)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_naive_table)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_sum_table)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
