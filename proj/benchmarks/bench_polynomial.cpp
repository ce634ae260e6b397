#include <benchmark/benchmark.h>

#include "quboc/polynomial.hpp"

using namespace quboc;

namespace {

Polynomial dense_poly(int n_vars, int degree) {
    PolynomialBuilder acc;
    std::vector<Var> vars;
    for (int i = 0; i < n_vars; ++i) vars.push_back(continuous_var("x" + std::to_string(i)));
    std::uint64_t state = 12345;
    for (int t = 0; t < 4 * n_vars; ++t) {
        PowerMap powers;
        int budget = degree;
        while (budget > 0) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            int v = static_cast<int>(state % static_cast<std::uint64_t>(n_vars));
            powers[vars[static_cast<std::size_t>(v)]] += 1;
            --budget;
            if ((state >> 32) % 3 == 0) break;
        }
        acc.add_term(static_cast<double>((state % 16)) - 8.0, std::move(powers));
    }
    return acc.build();
}

void BM_PolyMul(benchmark::State& state) {
    Polynomial a = dense_poly(static_cast<int>(state.range(0)), 3);
    Polynomial b = dense_poly(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8)->Arg(16);

void BM_PolySquare(benchmark::State& state) {
    Polynomial a = dense_poly(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * a);
    }
}
BENCHMARK(BM_PolySquare)->Arg(8)->Arg(16)->Arg(32);

void BM_Substitute(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Polynomial p = dense_poly(n, 3);
    Var x0 = continuous_var("x0");
    PolynomialBuilder acc;
    for (int b = 0; b < 6; ++b) {
        acc.add_term(static_cast<double>(1 << b), {{binary_var("q" + std::to_string(b)), 1}});
    }
    Polynomial replacement = acc.build();
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.substitute(x0, replacement));
    }
}
BENCHMARK(BM_Substitute)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
