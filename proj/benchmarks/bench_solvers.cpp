#include <benchmark/benchmark.h>

#include "quboc/qubo.hpp"
#include "quboc/solve.hpp"

using namespace quboc;

namespace {

QuboMatrix random_instance(int n, std::uint64_t seed) {
    QuboMatrix::Entries entries;
    std::uint64_t state = seed;
    for (int t = 0; t < 4 * n; ++t) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        int i = static_cast<int>((state >> 8) % static_cast<std::uint64_t>(n));
        int j = static_cast<int>((state >> 40) % static_cast<std::uint64_t>(n));
        if (i > j) std::swap(i, j);
        entries[{i, j}] += static_cast<double>(static_cast<int>(state % 17) - 8) * 0.5;
    }
    return QuboMatrix(n, std::move(entries), 0.0, {});
}

void BM_BruteForce(benchmark::State& state) {
    QuboMatrix q = random_instance(static_cast<int>(state.range(0)), 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force(q, 26));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteForce)->Arg(12)->Arg(16)->Arg(20);

void BM_AnnealSweeps(benchmark::State& state) {
    QuboMatrix q = random_instance(64, 123);
    AnnealParams params;
    params.restarts = 1;
    params.sweeps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulated_anneal(q, params));
    }
}
BENCHMARK(BM_AnnealSweeps)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
