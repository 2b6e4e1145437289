#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flock/agent.hpp"
#include "flock/rng.hpp"
#include "flock/world.hpp"

namespace flock {

enum class PlacementStrategy { Random, Grid, KMeans, CircleRandom, CircleGrid, CircleBorder };

struct PlacementSpec {
    PlacementStrategy strategy = PlacementStrategy::Random;
    Vec2 origin;            // circular strategies
    double radius = 500.0;  // r_p
    int count = 1;          // K
};

struct KMeansParams {
    int max_iterations = 100;
    double convergence_tol = 1e-6;
};

std::string placement_name(PlacementStrategy s);
std::optional<PlacementStrategy> placement_from_name(const std::string& name);
bool placement_is_circular(PlacementStrategy s);

/// K positions i.i.d. uniform over the world rectangle.
std::vector<Vec2> place_random_rect(int k, const WorldSpec& world, Rng& rng);

/// K positions area-uniform over disc(origin, radius), via radius * sqrt(u).
std::vector<Vec2> place_random_disc(int k, const Vec2& origin, double radius, Rng& rng);

/// Cell centers of the ceil(sqrt(K)) x ceil(sqrt(K)) lattice, row-major, first K.
std::vector<Vec2> place_grid(int k, const WorldSpec& world);

/// Lloyd k-means over the RV positions; centers seeded uniformly in the RV
/// bounding box. Empty clusters are reseeded at the point farthest from its
/// assigned center. Optionally records the objective after each iteration.
std::vector<Vec2> place_kmeans(int k, std::span<const Vec2> points, const KMeansParams& params,
                               Rng& rng, std::vector<double>* sse_trace = nullptr);

/// K equally spaced points on circle(origin, radius), starting at angle 0.
std::vector<Vec2> place_circle_border(int k, const Vec2& origin, double radius);

/// Sunflower spiral: the n-th agent at polar (c*sqrt(n), n * 2*pi/phi^2) about
/// the origin, with c chosen so the last agent sits at `radius`.
std::vector<Vec2> place_sunflower(int k, const Vec2& origin, double radius);

/// Dispatches on the strategy. `rv_positions` feeds k-means; the circular
/// strategies read origin/radius from the spec.
std::vector<Vec2> place_influencers(const PlacementSpec& spec, const WorldSpec& world,
                                    std::span<const Vec2> rv_positions, Rng& rng);

/// Initial Reynolds-Vicsek population: uniform over the grid (small/large) or
/// over the radius-500 disc at the world center (herd); headings uniform.
/// Ids run 0..n-1.
std::vector<AgentState> init_rv_agents(Setting setting, int n, Rng& rng);

}  // namespace flock
