#include "twocst/expectation.hpp"
#include "twocst/gen.hpp"
#include "twocst/merge.hpp"
#include "twocst/optimal.hpp"

#include <benchmark/benchmark.h>

using namespace twocst;

namespace {

void solve_kind(benchmark::State& state, TreeKind kind) {
    const int n = static_cast<int>(state.range(0));
    const Instance inst = random_instance(n, 12345);
    for (auto _ : state) {
        SolveResult r = optimal(inst, kind, SolverOptions{12});
        benchmark::DoNotOptimize(r.cost);
    }
}

void bm_solve_nil(benchmark::State& state) { solve_kind(state, TreeKind::Nil); }
void bm_solve_loc(benchmark::State& state) { solve_kind(state, TreeKind::Loc); }

void bm_convert_expectation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Instance inst = random_instance(n, 12345);
    const Tree tree = optimal(inst, TreeKind::Nil).tree;
    const ExpectationOptions options{1 << 14, false};
    for (auto _ : state) {
        ExpectationResult r = exact_expected_cost(tree, inst, options);
        benchmark::DoNotOptimize(r.expected_cost);
    }
}

void bm_merge(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Instance inst = random_instance(n, 12345);
    for (auto _ : state) {
        MergeResult r = merge_convert(inst);
        benchmark::DoNotOptimize(r.cost);
    }
}

} // namespace

BENCHMARK(bm_solve_nil)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_solve_loc)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_convert_expectation)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_merge)->DenseRange(2, 10, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
