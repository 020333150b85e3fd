// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "schubert/kohnert.hpp"
#include "schubert/schubert.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void BM_CompatibleSequences(benchmark::State& state) {
    auto w = Permutation::parse("41758236");
    for (auto _ : state) benchmark::DoNotOptimize(schubert_polynomial(w, Strategy::CompatibleSequences, mode(state)));
}

void BM_KohnertClosure(benchmark::State& state) {
    auto d = rothe_diagram(Permutation::parse("41758236"));
    for (auto _ : state) benchmark::DoNotOptimize(kohnert_closure(d, mode(state)));
}

void BM_CrossModel(benchmark::State& state) {
    auto perms = all_permutations(5);
    for (auto _ : state) benchmark::DoNotOptimize(verify_cross_model(perms, mode(state)));
}

}  // namespace

BENCHMARK(BM_CompatibleSequences)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KohnertClosure)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossModel)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
