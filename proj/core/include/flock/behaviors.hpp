#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flock/agent.hpp"
#include "flock/behavior_spec.hpp"
#include "flock/spatial_index.hpp"
#include "flock/world.hpp"

namespace flock {

/// One Reynolds-Vicsek neighbor as seen by a (pair of) lookahead influencer(s):
/// its current heading, the headings of its own neighbors minus the controlled
/// influencer(s), and which of the two controlled influencers it can see.
struct SimulatedNeighbor {
    double heading = 0.0;
    std::vector<double> other_headings;
    bool sees_first = true;
    bool sees_second = false;
};

/// Always face the goal.
double act_face(const BehaviorSpec& spec);

/// Align to (goal vector - average neighbor velocity). Falls back to the goal
/// direction with no neighbors or a vanishing offset vector.
double act_offset_momentum(std::span<const Vec2> neighbor_velocities, double goal, double speed);

/// Scans `candidate_count` headings anchored at the goal, simulating one
/// alignment step for each visible neighbor, and returns the candidate whose
/// simulated neighborhood lands closest (mean absolute wrapped difference) to
/// the goal. Ties break toward the lowest candidate index; no neighbors = goal.
double act_lookahead(double goal, int candidate_count, std::span<const SimulatedNeighbor> neighbors);

/// Joint exhaustive scan over both pair members' candidate sets, minimizing the
/// mean difference from the goal over the union of their neighborhoods.
/// Lexicographic tie-break; with no neighbors both face the goal.
std::pair<double, double> act_coordinated(double goal, int candidate_count,
                                          std::span<const SimulatedNeighbor> neighbors);

/// Heading toward the next waypoint of a counterclockwise orbit: the point on
/// circle(origin, target_radius) one step of arc ahead of the agent's current
/// polar angle. Returns nullopt at the origin (tangent undefined) or when the
/// agent sits exactly on the waypoint; callers hold the previous heading.
std::optional<double> act_circle(const Vec2& position, const Vec2& origin, double target_radius,
                                 double speed);

/// Steers for vertex `target_index` of the regular polygon; once within one
/// step of it, advances to the next vertex (counterclockwise). Returns the new
/// heading and target index.
std::pair<double, int> act_polygon(int target_index, const Vec2& position, const Vec2& origin,
                                   double poly_radius, int sides, double speed,
                                   double prev_heading);

/// Greedy closest-first matching over the influencer positions; with an odd
/// count the leftover stays unmatched and runs a solo lookahead. Returns pairs
/// as (lower id, higher id).
std::vector<std::pair<int, int>> pair_influencers(std::span<const int> ids,
                                                  std::span<const Vec2> positions,
                                                  const WorldSpec& world);

struct ConnectedEstimate {
    int count = 0;
    std::vector<int> reached;  // RV agent ids, ascending
};

/// Reynolds-Vicsek agents path-connected to the influencer, restricted to its
/// sensing ball (2r): BFS with edges at distance <= r between agents inside
/// the ball. Paths through agents outside the ball do not count.
ConnectedEstimate local_connected_count(const AgentState& influencer, const SpatialIndex& index,
                                        std::span<const AgentState* const> by_id,
                                        const WorldSpec& world);

/// Goal direction latched by multistep: circular mean over the deduplicated
/// connected RV agents plus (optionally) the influencers' own headings.
/// A degenerate mean falls back to the lowest-id influencer's heading.
double multistep_goal(std::span<const int> connected_rv_ids, std::span<const int> influencer_ids,
                      std::span<const AgentState* const> by_id, bool include_influencers);

}  // namespace flock
