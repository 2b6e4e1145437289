#include "flock/behaviors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flock/angles.hpp"
#include "flock/reynolds.hpp"

namespace flock {

double act_face(const BehaviorSpec& spec) { return wrap_angle(spec.goal_theta); }

double act_offset_momentum(std::span<const Vec2> neighbor_velocities, double goal, double speed) {
    if (neighbor_velocities.empty()) return wrap_angle(goal);
    Vec2 avg{0.0, 0.0};
    for (const Vec2& v : neighbor_velocities) avg += v;
    avg /= static_cast<double>(neighbor_velocities.size());
    const Vec2 offset = speed * unit_vec(goal) - avg;
    if (offset.norm() < 1e-12) return wrap_angle(goal);
    return wrap_angle(std::atan2(offset.y, offset.x));
}

namespace {

// Simulated next heading of a neighbor when the controlled influencer(s) it
// sees adopt the given candidate headings.
double simulated_next(const SimulatedNeighbor& nb, double cand_first, double cand_second) {
    double sum = 0.0;
    int n = static_cast<int>(nb.other_headings.size());
    for (double h : nb.other_headings) sum += angle_diff(h, nb.heading);
    if (nb.sees_first) {
        sum += angle_diff(cand_first, nb.heading);
        ++n;
    }
    if (nb.sees_second) {
        sum += angle_diff(cand_second, nb.heading);
        ++n;
    }
    if (n == 0) return nb.heading;
    return nb.heading + 0.5 * sum / n;
}

}  // namespace

// Exact mathematical ties (e.g. neighborhoods symmetric about the goal) land a
// few ulps apart after wrapping, so "strictly better" means better by more
// than this; effective ties keep the lowest candidate index.
constexpr double kTieTolerance = 1e-12;

double act_lookahead(double goal, int candidate_count, std::span<const SimulatedNeighbor> neighbors) {
    if (neighbors.empty()) return wrap_angle(goal);
    int best = 0;
    double best_objective = std::numeric_limits<double>::infinity();
    for (int k = 0; k < candidate_count; ++k) {
        const double cand = goal + kTwoPi * k / candidate_count;
        double objective = 0.0;
        for (const auto& nb : neighbors)
            objective += std::abs(angle_diff(simulated_next(nb, cand, cand), goal));
        if (objective < best_objective - kTieTolerance) {
            best_objective = objective;
            best = k;
        }
    }
    return wrap_angle(goal + kTwoPi * best / candidate_count);
}

std::pair<double, double> act_coordinated(double goal, int candidate_count,
                                          std::span<const SimulatedNeighbor> neighbors) {
    const double fallback = wrap_angle(goal);
    if (neighbors.empty()) return {fallback, fallback};

    // The objective decomposes per neighbor: members seen by only one of the
    // pair contribute a 1-D profile, shared members need the full joint grid.
    const int c = candidate_count;
    std::vector<double> first_profile(c, 0.0), second_profile(c, 0.0);
    std::vector<double> joint(static_cast<std::size_t>(c) * c, 0.0);
    bool any_joint = false;

    for (const auto& nb : neighbors) {
        if (nb.sees_first && nb.sees_second) {
            any_joint = true;
            for (int i = 0; i < c; ++i) {
                const double ca = goal + kTwoPi * i / c;
                for (int j = 0; j < c; ++j) {
                    const double cb = goal + kTwoPi * j / c;
                    joint[static_cast<std::size_t>(i) * c + j] +=
                        std::abs(angle_diff(simulated_next(nb, ca, cb), goal));
                }
            }
        } else if (nb.sees_first) {
            for (int i = 0; i < c; ++i) {
                const double ca = goal + kTwoPi * i / c;
                first_profile[i] += std::abs(angle_diff(simulated_next(nb, ca, ca), goal));
            }
        } else if (nb.sees_second) {
            for (int j = 0; j < c; ++j) {
                const double cb = goal + kTwoPi * j / c;
                second_profile[j] += std::abs(angle_diff(simulated_next(nb, cb, cb), goal));
            }
        }
    }

    int best_i = 0, best_j = 0;
    double best_objective = std::numeric_limits<double>::infinity();
    for (int i = 0; i < c; ++i) {
        for (int j = 0; j < c; ++j) {
            double objective = first_profile[i] + second_profile[j];
            if (any_joint) objective += joint[static_cast<std::size_t>(i) * c + j];
            if (objective < best_objective - kTieTolerance) {
                best_objective = objective;
                best_i = i;
                best_j = j;
            }
        }
    }
    return {wrap_angle(goal + kTwoPi * best_i / c), wrap_angle(goal + kTwoPi * best_j / c)};
}

std::optional<double> act_circle(const Vec2& position, const Vec2& origin, double target_radius,
                                 double speed) {
    const Vec2 rel = position - origin;
    if (rel.norm() < 1e-12 || target_radius <= 0.0) return std::nullopt;
    const double alpha = std::atan2(rel.y, rel.x);
    const Vec2 waypoint = origin + target_radius * unit_vec(alpha + speed / target_radius);
    const Vec2 dir = waypoint - position;
    if (dir.norm() < 1e-12) return std::nullopt;
    return wrap_angle(std::atan2(dir.y, dir.x));
}

std::pair<double, int> act_polygon(int target_index, const Vec2& position, const Vec2& origin,
                                   double poly_radius, int sides, double speed,
                                   double prev_heading) {
    auto vertex = [&](int k) { return origin + poly_radius * unit_vec(kTwoPi * k / sides); };
    if ((vertex(target_index) - position).norm() <= speed)
        target_index = (target_index + 1) % sides;
    const Vec2 dir = vertex(target_index) - position;
    if (dir.norm() < 1e-12) return {wrap_angle(prev_heading), target_index};
    return {wrap_angle(std::atan2(dir.y, dir.x)), target_index};
}

std::vector<std::pair<int, int>> pair_influencers(std::span<const int> ids,
                                                  std::span<const Vec2> positions,
                                                  const WorldSpec& world) {
    const int n = static_cast<int>(ids.size());
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> used(n, 0);
    while (true) {
        int best_a = -1, best_b = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (int a = 0; a < n; ++a) {
            if (used[a]) continue;
            for (int b = a + 1; b < n; ++b) {
                if (used[b]) continue;
                const double d = distance(positions[a], positions[b], world);
                if (d < best_d) {
                    best_d = d;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        if (best_a < 0) break;
        used[best_a] = used[best_b] = 1;
        pairs.emplace_back(std::min(ids[best_a], ids[best_b]),
                           std::max(ids[best_a], ids[best_b]));
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

ConnectedEstimate local_connected_count(const AgentState& influencer, const SpatialIndex& index,
                                        std::span<const AgentState* const> by_id,
                                        const WorldSpec& world) {
    const double r = world.neighborhood_radius;
    // Only RV agents inside the sensing ball participate as graph nodes.
    std::vector<int> ball = index.query(influencer.position, world.sensing_radius, influencer.id);
    std::vector<int> nodes;
    nodes.reserve(ball.size());
    for (int id : ball)
        if (!by_id[id]->is_influencer()) nodes.push_back(id);

    auto in_ball = [&](int id) {
        return std::binary_search(nodes.begin(), nodes.end(), id);
    };

    ConnectedEstimate est;
    std::vector<char> visited(nodes.size(), 0);
    std::vector<int> frontier;
    for (int id : nodes)
        if (distance(influencer.position, by_id[id]->position, world) <= r) frontier.push_back(id);
    for (int id : frontier) {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
        visited[it - nodes.begin()] = 1;
    }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int id : frontier) {
            est.reached.push_back(id);
            for (int nb : index.query(by_id[id]->position, r, id)) {
                if (!in_ball(nb)) continue;
                auto it = std::lower_bound(nodes.begin(), nodes.end(), nb);
                auto idx = static_cast<std::size_t>(it - nodes.begin());
                if (visited[idx]) continue;
                visited[idx] = 1;
                next.push_back(nb);
            }
        }
        frontier = std::move(next);
    }
    std::sort(est.reached.begin(), est.reached.end());
    est.count = static_cast<int>(est.reached.size());
    return est;
}

double multistep_goal(std::span<const int> connected_rv_ids, std::span<const int> influencer_ids,
                      std::span<const AgentState* const> by_id, bool include_influencers) {
    std::vector<double> headings;
    headings.reserve(connected_rv_ids.size() + influencer_ids.size());
    for (int id : connected_rv_ids) headings.push_back(by_id[id]->heading);
    if (include_influencers)
        for (int id : influencer_ids) headings.push_back(by_id[id]->heading);
    if (auto mean = circular_mean(headings)) return *mean;
    int lowest = *std::min_element(influencer_ids.begin(), influencer_ids.end());
    return by_id[lowest]->heading;
}

}  // namespace flock
