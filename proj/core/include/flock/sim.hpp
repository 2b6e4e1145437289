#pragma once

#include <cstdint>
#include <vector>

#include "flock/agent.hpp"
#include "flock/behavior_spec.hpp"
#include "flock/behaviors.hpp"
#include "flock/spatial_index.hpp"
#include "flock/world.hpp"

namespace flock {

/// Everything that evolves over a run. Controller phase data lives inside the
/// agents, so advancing is a pure function of (SimState, BehaviorSpec):
/// rebuilding a Simulation from a mid-run state continues bit-identically.
struct SimState {
    long long step = 0;
    std::vector<AgentState> agents;  // storage order is arbitrary; ids are stable
    WorldSpec world;
    std::uint64_t seed = 0;  // stream the initial conditions were drawn from
};

/// Synchronous two-phase stepper: every next heading is computed from the
/// time-t snapshot, then all agents turn and advance together. Results are
/// independent of agent storage order.
class Simulation {
  public:
    Simulation(SimState state, BehaviorSpec behavior,
               SpatialIndex::Mode index_mode = SpatialIndex::Mode::Grid);
    Simulation(const Simulation&) = delete;
    Simulation& operator=(const Simulation&) = delete;

    void step();
    void run(long long steps);

    const SimState& state() const { return state_; }
    const WorldSpec& world() const { return state_.world; }
    const BehaviorSpec& behavior() const { return behavior_; }
    long long current_step() const { return state_.step; }
    int rv_count() const { return rv_count_; }

    const AgentState& agent_by_id(int id) const { return *by_id_[id]; }

    /// Sum of the influencers' local connectivity estimates this step
    /// (multistep's latch signal); exposed for tests and diagnostics.
    long long last_connectivity_sum() const { return last_connectivity_sum_; }
    bool multistep_latched() const;

  private:
    void init_phases();
    void maybe_latch_multistep();
    double next_heading_for(AgentState& agent);
    double influencer_heading(AgentState& agent, BehaviorKind kind, double goal);
    double follow_heading(const AgentState& agent);
    void build_simulated_neighbors(const AgentState& first, const AgentState* second,
                                   std::vector<SimulatedNeighbor>& out) const;

    SimState state_;
    BehaviorSpec behavior_;
    Vec2 origin_;
    double multistep_threshold_ = 1.0;
    int rv_count_ = 0;
    std::vector<const AgentState*> by_id_;
    std::vector<int> influencer_ids_;  // ascending
    SpatialIndex index_;
    std::vector<double> next_headings_;  // by storage index
    std::vector<char> decided_;          // coordinated pairs decide two at once
    long long last_connectivity_sum_ = 0;

    // scratch
    mutable std::vector<int> query_buf_;
    std::vector<double> heading_buf_;
    std::vector<Vec2> velocity_buf_;
    std::vector<SimulatedNeighbor> neighbor_views_;
};

}  // namespace flock
