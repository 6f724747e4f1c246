#include <benchmark/benchmark.h>

#include "owc/commands.hpp"
#include "owc/exact.hpp"
#include "owc/qlearning.hpp"
#include "owc/scenario.hpp"

using namespace owc;

namespace {

void BM_EvaluateAssignment(benchmark::State& state) {
    const Scene scene = build_scene(scenario1_preset());
    Assignment a(4);
    for (int k = 1; k <= 4; ++k) a.assign(k, ApRef{k, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_assignment(a, scene, true));
    }
}
BENCHMARK(BM_EvaluateAssignment);

void BM_EnumerateActionSpace(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_action_space(4, 4, 4));
    }
}
BENCHMARK(BM_EnumerateActionSpace)->Unit(benchmark::kMillisecond);

void BM_SolveExactFull(benchmark::State& state) {
    const Scene scene = build_scene(scenario1_preset());
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_exact(scene, false));
    }
}
BENCHMARK(BM_SolveExactFull)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_TrainEpisodes(benchmark::State& state) {
    // memoized environment: measures the per-episode loop cost
    const Scene scene = build_scene(scenario1_preset());
    Hyperparams hp = scenario1_preset().ql;
    hp.max_episodes = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(train(scene, hp, false));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TrainEpisodes)
    ->Arg(100000)
    ->Arg(500000)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
