#include "flock/placement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "flock/angles.hpp"

namespace flock {

std::string placement_name(PlacementStrategy s) {
    switch (s) {
        case PlacementStrategy::Random: return "random";
        case PlacementStrategy::Grid: return "grid";
        case PlacementStrategy::KMeans: return "kmeans";
        case PlacementStrategy::CircleRandom: return "circle-random";
        case PlacementStrategy::CircleGrid: return "circle-grid";
        case PlacementStrategy::CircleBorder: return "circle-border";
    }
    return "?";
}

std::optional<PlacementStrategy> placement_from_name(const std::string& name) {
    for (PlacementStrategy s : {PlacementStrategy::Random, PlacementStrategy::Grid,
                                PlacementStrategy::KMeans, PlacementStrategy::CircleRandom,
                                PlacementStrategy::CircleGrid, PlacementStrategy::CircleBorder}) {
        if (name == placement_name(s)) return s;
    }
    return std::nullopt;
}

bool placement_is_circular(PlacementStrategy s) {
    return s == PlacementStrategy::CircleRandom || s == PlacementStrategy::CircleGrid ||
           s == PlacementStrategy::CircleBorder;
}

std::vector<Vec2> place_random_rect(int k, const WorldSpec& world, Rng& rng) {
    std::vector<Vec2> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        const double x = rng.uniform(world.width);
        const double y = rng.uniform(world.height);
        out.push_back({x, y});
    }
    return out;
}

std::vector<Vec2> place_random_disc(int k, const Vec2& origin, double radius, Rng& rng) {
    std::vector<Vec2> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        const double r = radius * std::sqrt(rng.next_double());
        const double a = rng.uniform(kTwoPi);
        out.push_back(origin + r * unit_vec(a));
    }
    return out;
}

std::vector<Vec2> place_grid(int k, const WorldSpec& world) {
    const int m = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(k))));
    std::vector<Vec2> out;
    out.reserve(k);
    for (int row = 0; row < m && static_cast<int>(out.size()) < k; ++row) {
        for (int col = 0; col < m && static_cast<int>(out.size()) < k; ++col) {
            out.push_back({world.width * (col + 0.5) / m, world.height * (row + 0.5) / m});
        }
    }
    return out;
}

std::vector<Vec2> place_kmeans(int k, std::span<const Vec2> points, const KMeansParams& params,
                               Rng& rng, std::vector<double>* sse_trace) {
    if (points.empty()) throw std::invalid_argument("k-means needs at least one point");
    const int n = static_cast<int>(points.size());

    Vec2 lo = points[0], hi = points[0];
    for (const Vec2& p : points) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    std::vector<Vec2> centers;
    centers.reserve(k);
    for (int i = 0; i < k; ++i) {
        const double x = rng.uniform(lo.x, hi.x);
        const double y = rng.uniform(lo.y, hi.y);
        centers.push_back({x, y});
    }

    std::vector<int> assign(n, -1), counts(k, 0);
    std::vector<int> prev_assign;
    if (sse_trace) sse_trace->clear();

    for (int iter = 0; iter < params.max_iterations; ++iter) {
        prev_assign = assign;
        std::fill(counts.begin(), counts.end(), 0);
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (int c = 0; c < k; ++c) {
                const double d = (points[i] - centers[c]).norm2();
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            assign[i] = best;
            ++counts[best];
        }

        // Empty clusters steal the point farthest from its assigned center,
        // but never a point that is its cluster's only member.
        bool reseeded = false;
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0) continue;
            int farthest = -1;
            double far_d = 0.0;
            for (int i = 0; i < n; ++i) {
                if (counts[assign[i]] < 2) continue;
                const double d = (points[i] - centers[assign[i]]).norm2();
                if (d > far_d) {
                    far_d = d;
                    farthest = i;
                }
            }
            if (farthest < 0) break;  // duplicate-heavy degenerate input; leave center as-is
            --counts[assign[farthest]];
            centers[c] = points[farthest];
            assign[farthest] = c;
            ++counts[c];
            reseeded = true;
        }

        double motion = 0.0;
        for (int c = 0; c < k; ++c) {
            if (counts[c] == 0) continue;
            Vec2 sum{0.0, 0.0};
            for (int i = 0; i < n; ++i)
                if (assign[i] == c) sum += points[i];
            const Vec2 next = sum / counts[c];
            motion = std::max(motion, (next - centers[c]).norm());
            centers[c] = next;
        }

        if (sse_trace) {
            double sse = 0.0;
            for (int i = 0; i < n; ++i) sse += (points[i] - centers[assign[i]]).norm2();
            sse_trace->push_back(sse);
        }

        if (!reseeded && assign == prev_assign) break;
        if (motion < params.convergence_tol) break;
    }
    return centers;
}

std::vector<Vec2> place_circle_border(int k, const Vec2& origin, double radius) {
    std::vector<Vec2> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) out.push_back(origin + radius * unit_vec(kTwoPi * i / k));
    return out;
}

std::vector<Vec2> place_sunflower(int k, const Vec2& origin, double radius) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double golden_angle = kTwoPi / (phi * phi);
    const double c = radius / std::sqrt(static_cast<double>(k));
    std::vector<Vec2> out;
    out.reserve(k);
    for (int n = 1; n <= k; ++n)
        out.push_back(origin + c * std::sqrt(static_cast<double>(n)) * unit_vec(golden_angle * n));
    return out;
}

std::vector<Vec2> place_influencers(const PlacementSpec& spec, const WorldSpec& world,
                                    std::span<const Vec2> rv_positions, Rng& rng) {
    switch (spec.strategy) {
        case PlacementStrategy::Random: return place_random_rect(spec.count, world, rng);
        case PlacementStrategy::Grid: return place_grid(spec.count, world);
        case PlacementStrategy::KMeans:
            return place_kmeans(spec.count, rv_positions, KMeansParams{}, rng);
        case PlacementStrategy::CircleRandom:
            return place_random_disc(spec.count, spec.origin, spec.radius, rng);
        case PlacementStrategy::CircleGrid:
            return place_sunflower(spec.count, spec.origin, spec.radius);
        case PlacementStrategy::CircleBorder:
            return place_circle_border(spec.count, spec.origin, spec.radius);
    }
    return {};
}

std::vector<AgentState> init_rv_agents(Setting setting, int n, Rng& rng) {
    const WorldSpec world = WorldSpec::for_setting(setting);
    std::vector<AgentState> agents;
    agents.reserve(n);
    for (int i = 0; i < n; ++i) {
        AgentState a;
        a.id = i;
        a.kind = AgentKind::ReynoldsVicsek;
        if (setting == Setting::Herd) {
            const double r = 500.0 * std::sqrt(rng.next_double());
            const double ang = rng.uniform(kTwoPi);
            a.position = world.center() + r * unit_vec(ang);
        } else {
            const double x = rng.uniform(world.width);
            const double y = rng.uniform(world.height);
            a.position = {x, y};
        }
        a.heading = rng.uniform(kTwoPi);
        agents.push_back(a);
    }
    return agents;
}

}  // namespace flock
