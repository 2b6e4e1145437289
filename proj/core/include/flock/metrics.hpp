#pragma once

#include <span>
#include <utility>
#include <vector>

#include "flock/agent.hpp"
#include "flock/sim.hpp"
#include "flock/world.hpp"

namespace flock {

struct MetricsParams {
    double epsilon_align = 0.1;        // "facing the same direction" tolerance, radians
    bool proximity_only_flocks = false;  // drop the heading requirement on flock edges
};

struct MetricSample {
    long long step = 0;
    int flock_count = 0;
    int lone_count = 0;
    double lone_fraction = 0.0;
    int max_aligned_count = 0;  // over RV agents
    int controlled_count = 0;
    int offworld_count = 0;
};

/// Connected components of the proximity graph (edges at distance <= r, both
/// agent kinds). Each component is sorted by id; components ordered by their
/// smallest member.
std::vector<std::vector<int>> proximity_components(std::span<const AgentState> agents, double r,
                                                   const WorldSpec& world);

/// Number of components of size >= 2 whose edges require both proximity and
/// |heading difference| <= eps_align (proximity alone with the variant flag).
int flock_count(std::span<const AgentState> agents, double r, double eps_align,
                const WorldSpec& world, bool proximity_only = false);

/// Agents with an empty radius-r neighborhood, heading-blind.
int lone_count(std::span<const AgentState> agents, double r, const WorldSpec& world);

/// Largest number of headings inside any closed angular window of width
/// eps_align (i.e. within eps_align/2 of some direction), found by a circular
/// sorted sweep. Returns the count and one achieving direction.
std::pair<int, double> max_aligned_group(std::span<const double> headings, double eps_align);

/// RV agents path-connected to at least one influencer whose heading is within
/// eps_align of the circular mean of their component's influencer headings.
int controlled_count(std::span<const AgentState> agents, double r, double eps_align,
                     const WorldSpec& world);

/// Agents outside [0,width) x [0,height). Always 0 on toroidal worlds.
int offworld_count(std::span<const AgentState> agents, const WorldSpec& world);

MetricSample sample_metrics(const SimState& state, const MetricsParams& params);

struct ConvergenceResult {
    long long step = 0;
    bool censored = false;
};

/// First sampled step where at least half the RV agents (ceil(n/2)) face a
/// common direction; censored at `cap` when never reached.
ConvergenceResult convergence_step(std::span<const MetricSample> samples, int rv_count,
                                   long long cap);

}  // namespace flock
