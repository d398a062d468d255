#include <benchmark/benchmark.h>

#include "ginbound/budget.hpp"
#include "ginbound/inequality.hpp"
#include "ginbound/lift.hpp"
#include "ginbound/optimizer.hpp"
#include "ginbound/survey.hpp"

using namespace ginbound;

namespace {

void BM_Enumerate(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_sequences(d, 4));
        benchmark::DoNotOptimize(enumerate_sequences(d, 5));
    }
}
BENCHMARK(BM_Enumerate)->Arg(46)->Arg(66);

void BM_WitnessRoundTrip(benchmark::State& state) {
    HeightFunction h(InvariantSequence({13, 11, 9, 7, 6}));
    h.set({4, 6}, 1);
    h.set({3, 7}, 13);
    h.set({2, 9}, 13);
    h.set({1, 11}, 13);
    h.set({0, 13}, 4);
    for (auto _ : state) {
        const MonomialIdeal ideal(minimal_generators(h));
        benchmark::DoNotOptimize(is_borel_fixed(ideal));
        benchmark::DoNotOptimize(heights_of(ideal));
    }
}
BENCHMARK(BM_WitnessRoundTrip);

void BM_MaximizePenalty(benchmark::State& state) {
    const InvariantSequence seq = state.range(0) == 0 ? InvariantSequence({13, 11, 10, 8, 6})
                                  : state.range(0) == 1 ? InvariantSequence({13, 11, 9, 7, 6})
                                                        : InvariantSequence({14, 12, 11, 9});
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const auto r = maximize_penalty(seq);
        nodes = r.nodes_explored;
        benchmark::DoNotOptimize(r.best_objective);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
    state.SetLabel(seq.to_string());
}
BENCHMARK(BM_MaximizePenalty)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Survey(benchmark::State& state) {
    SurveyConfig config;
    config.threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_survey(config).max_surviving_degree);
}
BENCHMARK(BM_Survey)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
