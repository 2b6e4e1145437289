#include <benchmark/benchmark.h>

#include "flock/angles.hpp"
#include "flock/metrics.hpp"
#include "flock/placement.hpp"
#include "flock/rng.hpp"
#include "flock/sim.hpp"

namespace {

using namespace flock;

SimState make_state(Setting setting, int rv, int influencers) {
    Rng rng(2);
    auto agents = init_rv_agents(setting, rv, rng);
    const WorldSpec world = WorldSpec::for_setting(setting);
    for (int i = 0; i < influencers; ++i) {
        AgentState a;
        a.id = rv + i;
        a.kind = AgentKind::Influencer;
        a.position = {rng.uniform(world.width), rng.uniform(world.height)};
        a.heading = rng.uniform(kTwoPi);
        agents.push_back(a);
    }
    return SimState{0, std::move(agents), world, 2};
}

void BM_StepLargeFace(benchmark::State& state) {
    BehaviorSpec face;
    Simulation sim(make_state(Setting::Large, 300, 50), face);
    for (auto _ : state) sim.step();
    state.SetItemsProcessed(state.iterations() * 350);
}

void BM_StepLargeLookahead(benchmark::State& state) {
    BehaviorSpec spec;
    spec.kind = BehaviorKind::Lookahead;
    Simulation sim(make_state(Setting::Large, 300, 50), spec);
    for (auto _ : state) sim.step();
    state.SetItemsProcessed(state.iterations() * 350);
}

void BM_StepHerdMulticircle(benchmark::State& state) {
    BehaviorSpec spec;
    spec.kind = BehaviorKind::Multicircle;
    spec.final_radius = 900.0;
    Rng rng(3);
    auto agents = init_rv_agents(Setting::Herd, 300, rng);
    const auto world = WorldSpec::herd_preset();
    const auto ring = place_circle_border(50, world.center(), 500.0);
    for (int i = 0; i < 50; ++i) {
        AgentState a;
        a.id = 300 + i;
        a.kind = AgentKind::Influencer;
        a.position = ring[i];
        a.heading = rng.uniform(kTwoPi);
        agents.push_back(a);
    }
    Simulation sim(SimState{0, std::move(agents), world, 3}, spec);
    for (auto _ : state) sim.step();
    state.SetItemsProcessed(state.iterations() * 350);
}

void BM_SampleMetrics(benchmark::State& state) {
    BehaviorSpec face;
    Simulation sim(make_state(Setting::Large, 300, 50), face);
    sim.run(1000);
    const MetricsParams params;
    for (auto _ : state) benchmark::DoNotOptimize(sample_metrics(sim.state(), params));
}

}  // namespace

BENCHMARK(BM_StepLargeFace)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StepLargeLookahead)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StepHerdMulticircle)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SampleMetrics)->Unit(benchmark::kMicrosecond);
