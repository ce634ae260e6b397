#include <benchmark/benchmark.h>

#include "quboc/compile.hpp"
#include "quboc/qubo.hpp"
#include "quboc/ratio_cut.hpp"

using namespace quboc;

namespace {

void BM_QuadratizeRatioCut(benchmark::State& state) {
    Graph g = demo_graph();
    RatioCutModel model = ratio_cut_objective(g, {});
    for (auto _ : state) {
        benchmark::DoNotOptimize(quadratize(model.objective, model.gadget_weight));
    }
}
BENCHMARK(BM_QuadratizeRatioCut);

void BM_CompileFixedPointCubic(benchmark::State& state) {
    Var x1 = continuous_var("x1"), x2 = continuous_var("x2"), x3 = continuous_var("x3");
    Polynomial p = Polynomial::monomial(1.0, {{x3, 3}}) +
                   Polynomial::monomial(1.0, {{x1, 1}, {x2, 1}}) + Polynomial::constant(-1.0);
    int r = static_cast<int>(state.range(0));
    std::map<Var, DomainSpec> domains{{x1, FixedPoint{r, r, true}},
                                      {x2, FixedPoint{r, r, true}},
                                      {x3, FixedPoint{r, r, true}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(compile(p, domains));
    }
}
BENCHMARK(BM_CompileFixedPointCubic)->Arg(1)->Arg(2);

void BM_Assemble(benchmark::State& state) {
    Graph g = demo_graph();
    RatioCutModel model = ratio_cut_objective(g, {});
    CompileArtifacts artifacts = quadratize(model.objective, model.gadget_weight);
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble(artifacts));
    }
}
BENCHMARK(BM_Assemble);

}  // namespace

BENCHMARK_MAIN();
