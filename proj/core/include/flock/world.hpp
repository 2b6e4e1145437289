#pragma once

#include <cmath>
#include <string>

#include "flock/vec2.hpp"

namespace flock {

enum class Topology { Toroidal, Open };

enum class Setting { Small, Large, Herd };

/// World geometry plus the interaction radii shared by every agent.
struct WorldSpec {
    double width = 1000.0;
    double height = 1000.0;
    Topology topology = Topology::Toroidal;
    double neighborhood_radius = 10.0;  // r
    double speed = 0.7;                 // s, per step
    double sensing_radius = 20.0;       // influencer perception, always 2*r

    static WorldSpec small_preset() { return make(150.0, 150.0, Topology::Toroidal, 20.0); }
    static WorldSpec large_preset() { return make(1000.0, 1000.0, Topology::Toroidal, 10.0); }
    static WorldSpec herd_preset() { return make(5000.0, 5000.0, Topology::Open, 10.0); }

    static WorldSpec for_setting(Setting s) {
        switch (s) {
            case Setting::Small: return small_preset();
            case Setting::Large: return large_preset();
            default: return herd_preset();
        }
    }

    Vec2 center() const { return {width / 2.0, height / 2.0}; }

  private:
    static WorldSpec make(double w, double h, Topology t, double r) {
        WorldSpec ws;
        ws.width = w;
        ws.height = h;
        ws.topology = t;
        ws.neighborhood_radius = r;
        ws.sensing_radius = 2.0 * r;
        return ws;
    }
};

inline double wrap_coord(double x, double dim) {
    double r = std::fmod(x, dim);
    if (r < 0.0) r += dim;
    if (r >= dim) r = 0.0;
    return r;
}

/// Reduces a position into [0, dim) per axis on toroidal worlds; identity on open worlds.
inline Vec2 wrap_position(const Vec2& p, const WorldSpec& world) {
    if (world.topology != Topology::Toroidal) return p;
    return {wrap_coord(p.x, world.width), wrap_coord(p.y, world.height)};
}

inline double min_image(double d, double dim) {
    d = std::fmod(d, dim);
    if (d < -dim / 2.0) d += dim;
    else if (d >= dim / 2.0) d -= dim;
    return d;
}

/// b - a under the minimum-image convention per axis (toroidal); plain b - a on open worlds.
inline Vec2 torus_delta(const Vec2& a, const Vec2& b, const WorldSpec& world) {
    Vec2 d = b - a;
    if (world.topology != Topology::Toroidal) return d;
    return {min_image(d.x, world.width), min_image(d.y, world.height)};
}

inline double distance(const Vec2& a, const Vec2& b, const WorldSpec& world) {
    return torus_delta(a, b, world).norm();
}

}  // namespace flock
