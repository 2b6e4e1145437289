#include <benchmark/benchmark.h>

#include "flock/placement.hpp"
#include "flock/rng.hpp"
#include "flock/spatial_index.hpp"

namespace {

using namespace flock;

std::vector<AgentState> population(int n) {
    Rng rng(1);
    return init_rv_agents(Setting::Large, n, rng);
}

void BM_IndexBuild(benchmark::State& state) {
    const auto world = WorldSpec::large_preset();
    const auto agents = population(static_cast<int>(state.range(0)));
    SpatialIndex index(world, world.neighborhood_radius);
    for (auto _ : state) {
        index.build(agents);
        benchmark::ClobberMemory();
    }
}

void BM_RadiusQueryGrid(benchmark::State& state) {
    const auto world = WorldSpec::large_preset();
    const auto agents = population(static_cast<int>(state.range(0)));
    SpatialIndex index(world, world.neighborhood_radius);
    index.build(agents);
    std::vector<int> out;
    std::size_t i = 0;
    for (auto _ : state) {
        index.query(agents[i % agents.size()].position, world.neighborhood_radius,
                    agents[i % agents.size()].id, out);
        benchmark::DoNotOptimize(out);
        ++i;
    }
}

void BM_RadiusQueryBrute(benchmark::State& state) {
    const auto world = WorldSpec::large_preset();
    const auto agents = population(static_cast<int>(state.range(0)));
    SpatialIndex index(world, world.neighborhood_radius, SpatialIndex::Mode::BruteForce);
    index.build(agents);
    std::vector<int> out;
    std::size_t i = 0;
    for (auto _ : state) {
        index.query(agents[i % agents.size()].position, world.neighborhood_radius,
                    agents[i % agents.size()].id, out);
        benchmark::DoNotOptimize(out);
        ++i;
    }
}

}  // namespace

BENCHMARK(BM_IndexBuild)->Arg(350)->Arg(1000);
BENCHMARK(BM_RadiusQueryGrid)->Arg(350)->Arg(1000)->Arg(5000);
BENCHMARK(BM_RadiusQueryBrute)->Arg(350)->Arg(1000)->Arg(5000);
