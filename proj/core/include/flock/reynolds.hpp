#pragma once

#include <span>

#include "flock/agent.hpp"
#include "flock/angles.hpp"
#include "flock/world.hpp"

namespace flock {

/// Alignment update: theta + 1/2 * mean of wrapped differences to the neighbors.
/// The 1/2 damps the turn toward the local average; with no neighbors the
/// heading is unchanged. Differences are wrapped into (-pi, pi] first so agents
/// straddling the 0/2pi seam agree instead of diverging.
inline double rv_next_heading(double heading, std::span<const double> neighbor_headings) {
    if (neighbor_headings.empty()) return wrap_angle(heading);
    double sum = 0.0;
    for (double h : neighbor_headings) sum += angle_diff(h, heading);
    return wrap_angle(heading + 0.5 * sum / static_cast<double>(neighbor_headings.size()));
}

/// Position displaced by one step of length `speed` along the (already updated)
/// heading, wrapped on toroidal worlds.
inline Vec2 advance_position(const AgentState& agent, const WorldSpec& world) {
    Vec2 p = agent.position + world.speed * unit_vec(agent.heading);
    return wrap_position(p, world);
}

}  // namespace flock
