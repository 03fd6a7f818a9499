#include <benchmark/benchmark.h>

#include <array>
#include <memory>
#include <vector>

#include "seedspan/agents/agents.hpp"
#include "seedspan/games/registry.hpp"
#include "seedspan/stats/stats.hpp"

using namespace seedspan;

namespace {

void BM_RngNext(benchmark::State& state) {
    Rng rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(rng.next());
}
BENCHMARK(BM_RngNext);

void BM_RngNextBelow(benchmark::State& state) {
    Rng rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(rng.next_below(52));
}
BENCHMARK(BM_RngNextBelow);

void BM_DeriveSeed(benchmark::State& state) {
    std::uint64_t base = 42;
    for (auto _ : state) {
        base = derive_seed(base, "stream");
        benchmark::DoNotOptimize(base);
    }
}
BENCHMARK(BM_DeriveSeed);

void BM_RandomPlayout(benchmark::State& state, const char* name) {
    auto game = build_game(name);
    std::uint64_t g = 0;
    for (auto _ : state) {
        SeedSet seeds;
        seeds.game_master_seed = derive_seed(++g, "m");
        seeds.redeterminization_seed = derive_seed(g, "r");
        seeds.agent_seeds = {derive_seed(g, 0), derive_seed(g, 1)};
        auto a0 = make_agent({}, seeds.agent_seeds[0]);
        auto a1 = make_agent({}, seeds.agent_seeds[1]);
        std::array<Agent*, 2> agents{a0.get(), a1.get()};
        benchmark::DoNotOptimize(
            play_game(*game, seeds, std::span<Agent* const>(agents.data(), 2)).outcome.scores[0]);
    }
}
BENCHMARK_CAPTURE(BM_RandomPlayout, connect4, "connect4");
BENCHMARK_CAPTURE(BM_RandomPlayout, cantstop, "cantstop");
BENCHMARK_CAPTURE(BM_RandomPlayout, loveletter, "loveletter");
BENCHMARK_CAPTURE(BM_RandomPlayout, kuhn, "kuhn");

void BM_IsmctsDecision(benchmark::State& state, const char* name) {
    auto game = build_game(name);
    StreamSet streams = StreamSet::simulation(game->def(), 7);
    auto st = game->new_game(streams);
    int budget = static_cast<int>(state.range(0));
    IsmctsAgent agent({AgentKind::ismcts, budget}, 99);
    ChanceStream redet = derive_stream(5, "redet");
    for (auto _ : state) benchmark::DoNotOptimize(agent.act(*game, *st, 0, redet));
}
BENCHMARK_CAPTURE(BM_IsmctsDecision, connect4, "connect4")->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_IsmctsDecision, cantstop, "cantstop")->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_IsmctsDecision, loveletter, "loveletter")->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_IsmctsDecision, kuhn, "kuhn")->Arg(64)->Arg(1024);

void BM_BinomialInterval(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(binomial_interval(n, 0.5, 0.99));
}
BENCHMARK(BM_BinomialInterval)->Arg(100)->Arg(1000);

void BM_ComputeMetrics(benchmark::State& state) {
    Rng rng(11);
    std::vector<double> rates(200);
    for (auto& r : rates) r = rng.next_double();
    for (auto _ : state) benchmark::DoNotOptimize(compute_metrics(rates, 1000).entropy);
}
BENCHMARK(BM_ComputeMetrics);

} // namespace

BENCHMARK_MAIN();
