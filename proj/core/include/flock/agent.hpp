#pragma once

#include <cstdint>

#include "flock/vec2.hpp"

namespace flock {

enum class AgentKind : std::uint8_t { ReynoldsVicsek, Influencer };

enum class MultistepStage : std::uint8_t { Inactive, Follow, Influence };

enum class MulticircleStage : std::uint8_t { Inactive, CirclingInitial, Following, CirclingFinal };

/// Controller phase data carried by influencers. Reynolds-Vicsek agents ignore it.
/// All of it is plain state so that advancing a simulation stays a pure function
/// of (state, behavior spec).
struct InfluencerPhase {
    MultistepStage multistep = MultistepStage::Inactive;
    double influence_goal = 0.0;  // goal direction latched by multistep
    MulticircleStage multicircle = MulticircleStage::Inactive;
    int polygon_target = -1;   // index of the vertex currently steered for
    int partner = -1;          // coordinated-pair partner id, -1 = none/solo
    double orbit_radius = 0.0; // per-agent circling radius (distance to origin at t=0)
};

struct AgentState {
    int id = 0;
    Vec2 position;
    double heading = 0.0;  // radians, kept in [0, 2*pi)
    AgentKind kind = AgentKind::ReynoldsVicsek;
    InfluencerPhase phase;

    bool is_influencer() const { return kind == AgentKind::Influencer; }
};

}  // namespace flock
