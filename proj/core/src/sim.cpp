#include "flock/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flock/angles.hpp"
#include "flock/reynolds.hpp"

namespace flock {

Simulation::Simulation(SimState state, BehaviorSpec behavior, SpatialIndex::Mode index_mode)
    : state_(std::move(state)),
      behavior_(behavior),
      origin_(state_.world.center()),
      index_(state_.world, state_.world.neighborhood_radius, index_mode) {
    int max_id = -1;
    for (const auto& a : state_.agents) max_id = std::max(max_id, a.id);
    by_id_.assign(static_cast<std::size_t>(max_id) + 1, nullptr);
    for (const auto& a : state_.agents) {
        if (by_id_[a.id] != nullptr) throw std::invalid_argument("duplicate agent id");
        by_id_[a.id] = &a;
        if (a.is_influencer()) influencer_ids_.push_back(a.id);
        else ++rv_count_;
    }
    std::sort(influencer_ids_.begin(), influencer_ids_.end());
    multistep_threshold_ = std::max(1.0, behavior_.threshold_frac * rv_count_);
    if (state_.step == 0) init_phases();
}

// Fills the phase fields that are functions of the initial placement. Only
// runs at t=0 and only overwrites defaults, so reconstructing a simulation
// from a state that already carries phases is a no-op.
void Simulation::init_phases() {
    const double min_orbit = state_.world.speed;  // degenerate placements at O orbit tightly
    for (auto& a : state_.agents) {
        if (!a.is_influencer()) continue;
        switch (behavior_.kind) {
            case BehaviorKind::Multistep:
                if (a.phase.multistep == MultistepStage::Inactive)
                    a.phase.multistep = MultistepStage::Follow;
                break;
            case BehaviorKind::Multicircle:
                if (a.phase.multicircle == MulticircleStage::Inactive)
                    a.phase.multicircle = MulticircleStage::CirclingInitial;
                [[fallthrough]];
            case BehaviorKind::Circle:
            case BehaviorKind::Polygon:
                if (a.phase.orbit_radius <= 0.0)
                    a.phase.orbit_radius =
                        std::max(min_orbit, distance(a.position, origin_, state_.world));
                if (behavior_.kind == BehaviorKind::Polygon && a.phase.polygon_target < 0) {
                    const Vec2 rel = a.position - origin_;
                    const double alpha =
                        rel.norm() < 1e-12 ? 0.0 : wrap_angle(std::atan2(rel.y, rel.x));
                    const double sector = kTwoPi / behavior_.polygon_sides;
                    a.phase.polygon_target =
                        (static_cast<int>(alpha / sector) + 1) % behavior_.polygon_sides;
                }
                break;
            default: break;
        }
    }

    const bool needs_pairs =
        behavior_.kind == BehaviorKind::Coordinated ||
        (behavior_.kind == BehaviorKind::Multistep &&
         behavior_.second_stage == BehaviorKind::Coordinated);
    if (needs_pairs && !influencer_ids_.empty()) {
        bool already_paired = false;
        for (int id : influencer_ids_)
            if (by_id_[id]->phase.partner >= 0) already_paired = true;
        if (!already_paired) {
            std::vector<Vec2> positions;
            positions.reserve(influencer_ids_.size());
            for (int id : influencer_ids_) positions.push_back(by_id_[id]->position);
            auto pairs = pair_influencers(influencer_ids_, positions, state_.world);
            for (auto& a : state_.agents) {
                for (auto [x, y] : pairs) {
                    if (a.id == x) a.phase.partner = y;
                    if (a.id == y) a.phase.partner = x;
                }
            }
        }
    }
}

bool Simulation::multistep_latched() const {
    if (behavior_.kind != BehaviorKind::Multistep || influencer_ids_.empty()) return false;
    return by_id_[influencer_ids_.front()]->phase.multistep == MultistepStage::Influence;
}

// The latch fires simultaneously for every influencer once the (possibly
// double-counting) sum of their local connectivity estimates reaches the
// threshold; the shared goal is frozen from the deduplicated union.
void Simulation::maybe_latch_multistep() {
    if (behavior_.kind != BehaviorKind::Multistep || influencer_ids_.empty()) return;
    if (multistep_latched()) return;

    long long sum = 0;
    std::vector<int> connected_union;
    for (int id : influencer_ids_) {
        auto est = local_connected_count(*by_id_[id], index_, by_id_, state_.world);
        sum += est.count;
        connected_union.insert(connected_union.end(), est.reached.begin(), est.reached.end());
    }
    last_connectivity_sum_ = sum;
    if (static_cast<double>(sum) < multistep_threshold_) return;

    std::sort(connected_union.begin(), connected_union.end());
    connected_union.erase(std::unique(connected_union.begin(), connected_union.end()),
                          connected_union.end());
    const double goal = multistep_goal(connected_union, influencer_ids_, by_id_,
                                       behavior_.include_influencer_headings);
    for (auto& a : state_.agents) {
        if (!a.is_influencer()) continue;
        a.phase.multistep = MultistepStage::Influence;
        a.phase.influence_goal = goal;
    }
}

double Simulation::follow_heading(const AgentState& agent) {
    index_.query(agent.position, state_.world.neighborhood_radius, agent.id, query_buf_);
    heading_buf_.clear();
    for (int id : query_buf_) heading_buf_.push_back(by_id_[id]->heading);
    return rv_next_heading(agent.heading, heading_buf_);
}

void Simulation::build_simulated_neighbors(const AgentState& first, const AgentState* second,
                                           std::vector<SimulatedNeighbor>& out) const {
    const auto& world = state_.world;
    const double r = world.neighborhood_radius;
    out.clear();

    std::vector<int> members = index_.query(first.position, r, first.id);
    if (second != nullptr) {
        std::vector<int> more = index_.query(second->position, r, second->id);
        members.insert(members.end(), more.begin(), more.end());
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    for (int id : members) {
        const AgentState& nb = *by_id_[id];
        if (nb.is_influencer()) continue;  // only Reynolds-Vicsek agents are predictable
        SimulatedNeighbor view;
        view.heading = nb.heading;
        view.sees_first = distance(nb.position, first.position, world) <= r;
        view.sees_second = second != nullptr && distance(nb.position, second->position, world) <= r;
        if (!view.sees_first && !view.sees_second) continue;
        for (int k : index_.query(nb.position, r, nb.id)) {
            if (k == first.id || (second != nullptr && k == second->id)) continue;
            view.other_headings.push_back(by_id_[k]->heading);
        }
        out.push_back(std::move(view));
    }
}

double Simulation::influencer_heading(AgentState& agent, BehaviorKind kind, double goal) {
    const auto& world = state_.world;
    const double r = world.neighborhood_radius;
    const double circle_r =
        behavior_.circle_radius > 0.0 ? behavior_.circle_radius : agent.phase.orbit_radius;

    switch (kind) {
        case BehaviorKind::Face: return wrap_angle(goal);

        case BehaviorKind::OffsetMomentum: {
            index_.query(agent.position, r, agent.id, query_buf_);
            velocity_buf_.clear();
            for (int id : query_buf_)
                velocity_buf_.push_back(world.speed * unit_vec(by_id_[id]->heading));
            return act_offset_momentum(velocity_buf_, goal, world.speed);
        }

        case BehaviorKind::Lookahead: {
            build_simulated_neighbors(agent, nullptr, neighbor_views_);
            return act_lookahead(goal, behavior_.lookahead_candidates(), neighbor_views_);
        }

        case BehaviorKind::Coordinated: {
            // Pairs are resolved by the caller; a lone leftover scans solo.
            build_simulated_neighbors(agent, nullptr, neighbor_views_);
            return act_lookahead(goal, behavior_.coordinated_candidates(), neighbor_views_);
        }

        case BehaviorKind::Circle:
            return act_circle(agent.position, origin_, circle_r, world.speed)
                .value_or(agent.heading);

        case BehaviorKind::Polygon: {
            auto [heading, target] = act_polygon(
                agent.phase.polygon_target, agent.position, origin_, circle_r,
                behavior_.polygon_sides, world.speed, agent.heading);
            agent.phase.polygon_target = target;
            return heading;
        }

        default: return wrap_angle(goal);
    }
}

double Simulation::next_heading_for(AgentState& agent) {
    if (!agent.is_influencer()) return follow_heading(agent);

    BehaviorKind kind = behavior_.kind;
    double goal = behavior_.goal_theta;

    if (kind == BehaviorKind::Multistep) {
        if (agent.phase.multistep != MultistepStage::Influence) return follow_heading(agent);
        kind = behavior_.second_stage;
        goal = agent.phase.influence_goal;
    }

    if (kind == BehaviorKind::Multicircle) {
        auto& phase = agent.phase;
        const auto& world = state_.world;
        if (phase.multicircle == MulticircleStage::CirclingInitial) {
            index_.query(agent.position, world.neighborhood_radius, agent.id, query_buf_);
            bool rv_nearby = false;
            for (int id : query_buf_)
                if (!by_id_[id]->is_influencer()) rv_nearby = true;
            if (rv_nearby) phase.multicircle = MulticircleStage::Following;
        }
        if (phase.multicircle == MulticircleStage::Following &&
            distance(agent.position, origin_, world) >= behavior_.final_radius)
            phase.multicircle = MulticircleStage::CirclingFinal;

        switch (phase.multicircle) {
            case MulticircleStage::CirclingInitial:
                return act_circle(agent.position, origin_, phase.orbit_radius, world.speed)
                    .value_or(agent.heading);
            case MulticircleStage::Following: return follow_heading(agent);
            default:
                return act_circle(agent.position, origin_, behavior_.final_radius, world.speed)
                    .value_or(agent.heading);
        }
    }

    return influencer_heading(agent, kind, goal);
}

void Simulation::step() {
    const auto& world = state_.world;
    const std::size_t n = state_.agents.size();

    index_.build(state_.agents);
    maybe_latch_multistep();

    next_headings_.resize(n);
    decided_.assign(n, 0);

    const bool joint_pairs =
        behavior_.kind == BehaviorKind::Coordinated ||
        (behavior_.kind == BehaviorKind::Multistep &&
         behavior_.second_stage == BehaviorKind::Coordinated && multistep_latched());

    for (std::size_t i = 0; i < n; ++i) {
        if (decided_[i]) continue;
        AgentState& agent = state_.agents[i];

        if (joint_pairs && agent.is_influencer() && agent.phase.partner >= 0) {
            const AgentState& partner = *by_id_[agent.phase.partner];
            const AgentState& lo = agent.id < partner.id ? agent : partner;
            const AgentState& hi = agent.id < partner.id ? partner : agent;
            const double goal = behavior_.kind == BehaviorKind::Multistep
                                    ? agent.phase.influence_goal
                                    : behavior_.goal_theta;
            build_simulated_neighbors(lo, &hi, neighbor_views_);
            auto [h_lo, h_hi] =
                act_coordinated(goal, behavior_.coordinated_candidates(), neighbor_views_);
            const std::size_t lo_idx = &lo - state_.agents.data();
            const std::size_t hi_idx = &hi - state_.agents.data();
            next_headings_[lo_idx] = h_lo;
            next_headings_[hi_idx] = h_hi;
            decided_[lo_idx] = decided_[hi_idx] = 1;
            continue;
        }

        next_headings_[i] = next_heading_for(agent);
        decided_[i] = 1;
    }

    for (std::size_t i = 0; i < n; ++i) {
        AgentState& agent = state_.agents[i];
        agent.heading = wrap_angle(next_headings_[i]);
        agent.position = advance_position(agent, world);
    }
    ++state_.step;
}

void Simulation::run(long long steps) {
    for (long long i = 0; i < steps; ++i) step();
}

}  // namespace flock
