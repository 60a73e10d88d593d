#include <benchmark/benchmark.h>

#include "courtmix/analytics.hpp"
#include "courtmix/random_dynamics.hpp"
#include "courtmix/reduced_chain.hpp"
#include "courtmix/sequence.hpp"
#include "courtmix/verify.hpp"

#include <numeric>
#include <random>

using namespace courtmix;

static void BM_ApplyStep(benchmark::State& state) {
    std::mt19937_64 rng(1);
    Configuration c = Configuration::reference();
    for (auto _ : state) {
        c = apply_step(c, sample_game_step(rng));
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ApplyStep);

static void BM_ApplySequenceF(benchmark::State& state) {
    const Sequence f = expand(parse("F"));
    for (auto _ : state) {
        auto r = apply_sequence(Configuration::reference(), f);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ApplySequenceF);

static void BM_BuildFriendChain(benchmark::State& state) {
    for (auto _ : state) {
        auto chain = build_friend_chain();
        benchmark::DoNotOptimize(chain);
    }
}
BENCHMARK(BM_BuildFriendChain);

static void BM_DistanceReport(benchmark::State& state) {
    const ReducedChain chain = build_big_friend_chain();
    for (auto _ : state) {
        auto rows = distance_report(chain, 9);
        benchmark::DoNotOptimize(rows);
    }
}
BENCHMARK(BM_DistanceReport);

static void BM_FundamentalMatrix(benchmark::State& state) {
    const ReducedChain chain = build_friend_chain();
    for (auto _ : state) {
        auto z = fundamental_matrix(chain);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_FundamentalMatrix);

static void BM_EncounterAllTrials(benchmark::State& state) {
    for (auto _ : state) {
        auto e = estimate_encounter_all(EgoCourt::First, 8, state.range(0), 7, 1);
        benchmark::DoNotOptimize(e);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EncounterAllTrials)->Arg(10000);

static void BM_PlanToReference(benchmark::State& state) {
    std::mt19937_64 rng(42);
    std::array<int, 24> seating{};
    std::iota(seating.begin(), seating.end(), 0);
    for (auto _ : state) {
        state.PauseTiming();
        std::shuffle(seating.begin(), seating.end(), rng);
        const Configuration c = Configuration::from_seating(seating);
        state.ResumeTiming();
        auto plan = plan_to_reference(c);
        benchmark::DoNotOptimize(plan);
    }
}
BENCHMARK(BM_PlanToReference);

BENCHMARK_MAIN();
