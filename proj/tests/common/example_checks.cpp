#include "example_checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "flock/angles.hpp"
#include "flock/behaviors.hpp"
#include "flock/config.hpp"
#include "flock/experiment.hpp"
#include "flock/metrics.hpp"
#include "flock/placement.hpp"
#include "flock/reynolds.hpp"
#include "flock/rng.hpp"
#include "flock/sim.hpp"
#include "flock/spatial_index.hpp"
#include "oracles.hpp"

namespace flock_tests {

using namespace flock;

namespace {

constexpr double kPi = std::numbers::pi;

bool near(double a, double b, double tol, std::string& detail) {
    if (std::abs(a - b) <= tol) return true;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "expected %.12g, got %.12g (tol %g)", b, a, tol);
    detail = buf;
    return false;
}

bool near_angle(double a, double b, double tol, std::string& detail) {
    if (std::abs(angle_diff(a, b)) <= tol) return true;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "expected angle %.12g, got %.12g (tol %g)", b, a, tol);
    detail = buf;
    return false;
}

bool expect(bool ok, const std::string& why, std::string& detail) {
    if (!ok) detail = why;
    return ok;
}

AgentState make_agent(int id, Vec2 pos, double heading,
                      AgentKind kind = AgentKind::ReynoldsVicsek) {
    AgentState a;
    a.id = id;
    a.position = pos;
    a.heading = heading;
    a.kind = kind;
    return a;
}

std::vector<const AgentState*> id_table(const std::vector<AgentState>& agents) {
    int max_id = 0;
    for (const auto& a : agents) max_id = std::max(max_id, a.id);
    std::vector<const AgentState*> by_id(max_id + 1, nullptr);
    for (const auto& a : agents) by_id[a.id] = &a;
    return by_id;
}

// ---------------------------------------------------------------- geometry --

void geometry_checks(std::vector<ExampleCheck>& checks) {
    checks.push_back({"wrap_position: crossing the seam", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        const Vec2 p = wrap_position({999.9 + 0.7, 500.0}, w);
        return near(p.x, 0.6, 1e-9, d) && near(p.y, 500.0, 1e-9, d);
    }});
    checks.push_back({"wrap_position: identity in bounds", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        const Vec2 p = wrap_position({500.0, 500.0}, w);
        return near(p.x, 500.0, 1e-9, d) && near(p.y, 500.0, 1e-9, d);
    }});
    checks.push_back({"wrap_position: negative and boundary", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        const Vec2 p = wrap_position({-0.2, 1000.0}, w);
        return near(p.x, 999.8, 1e-9, d) && near(p.y, 0.0, 1e-9, d);
    }});

    checks.push_back({"torus_delta: minimum image", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        const Vec2 delta = torus_delta({10, 10}, {990, 10}, w);
        return near(delta.x, -20.0, 1e-9, d) && near(delta.y, 0.0, 1e-9, d);
    }});
    checks.push_back({"torus_delta: coincident", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        const Vec2 delta = torus_delta({123, 456}, {123, 456}, w);
        return near(delta.x, 0.0, 1e-9, d) && near(delta.y, 0.0, 1e-9, d);
    }});
    checks.push_back({"torus_delta: open world plain difference", [](std::string& d) {
        const auto w = WorldSpec::herd_preset();
        const Vec2 delta = torus_delta({10, 10}, {990, 10}, w);
        return near(delta.x, 980.0, 1e-9, d) && near(delta.y, 0.0, 1e-9, d);
    }});

    checks.push_back({"distance: across the seam", [](std::string& d) {
        return near(distance({10, 10}, {990, 10}, WorldSpec::large_preset()), 20.0, 1e-9, d);
    }});
    checks.push_back({"distance: coincident points", [](std::string& d) {
        return near(distance({77, 88}, {77, 88}, WorldSpec::large_preset()), 0.0, 1e-9, d);
    }});
    checks.push_back({"distance: open-world 3-4-5", [](std::string& d) {
        return near(distance({0, 0}, {3, 4}, WorldSpec::herd_preset()), 5.0, 1e-9, d);
    }});

    checks.push_back({"angle_diff: wraps across the seam", [](std::string& d) {
        return near(angle_diff(0.1, kTwoPi - 0.1), 0.2, 1e-9, d);
    }});
    checks.push_back({"angle_diff: zero for equal angles", [](std::string& d) {
        return near(angle_diff(1.234, 1.234), 0.0, 1e-9, d);
    }});
    checks.push_back({"angle_diff: boundary maps to +pi", [](std::string& d) {
        return near(angle_diff(kPi, 0.0), kPi, 1e-9, d);
    }});

    checks.push_back({"circular_mean: quarter split", [](std::string& d) {
        const double h[] = {0.0, kPi / 2};
        auto m = circular_mean(h);
        return expect(m.has_value(), "mean missing", d) && near(*m, kPi / 4, 1e-9, d);
    }});
    checks.push_back({"circular_mean: repeated heading", [](std::string& d) {
        const double h[] = {kPi / 6, kPi / 6};
        auto m = circular_mean(h);
        return expect(m.has_value(), "mean missing", d) && near(*m, kPi / 6, 1e-9, d);
    }});
    checks.push_back({"circular_mean: opposite headings degenerate", [](std::string& d) {
        const double h[] = {0.0, kPi};
        return expect(!circular_mean(h).has_value(), "expected degenerate mean", d);
    }});

    checks.push_back({"radius_query: pair 9 apart sees each other", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0),
                                       make_agent(1, {109, 100}, 0)};
        SpatialIndex index(w, w.neighborhood_radius);
        index.build(agents);
        return expect(index.query(agents[0].position, 10.0, 0) == std::vector<int>{1} &&
                          index.query(agents[1].position, 10.0, 1) == std::vector<int>{0},
                      "pair should be mutually visible", d);
    }});
    checks.push_back({"radius_query: pair 11 apart sees nothing", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0),
                                       make_agent(1, {111, 100}, 0)};
        SpatialIndex index(w, w.neighborhood_radius);
        index.build(agents);
        return expect(index.query(agents[0].position, 10.0, 0).empty(),
                      "out-of-range agent returned", d);
    }});
    checks.push_back({"radius_query: 200 random agents match pairwise scan", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        Rng rng(41);
        std::vector<AgentState> agents;
        for (int i = 0; i < 200; ++i)
            agents.push_back(make_agent(i, {rng.uniform(w.width), rng.uniform(w.height)}, 0));
        SpatialIndex index(w, w.neighborhood_radius);
        index.build(agents);
        for (const auto& a : agents) {
            const auto got = index.query(a.position, 10.0, a.id);
            const auto want = oracle::neighbors(agents, a.position, 10.0, w, a.id);
            if (got != want) return expect(false, "mismatch vs brute force", d);
        }
        return true;
    }});

    checks.push_back({"rv_next_heading: no neighbors keeps heading", [](std::string& d) {
        return near(rv_next_heading(1.0, {}), 1.0, 1e-9, d);
    }});
    checks.push_back({"rv_next_heading: single neighbor momentum", [](std::string& d) {
        const double nb[] = {kPi / 2};
        return near(rv_next_heading(0.0, nb), kPi / 4, 1e-9, d);
    }});
    checks.push_back({"rv_next_heading: wrapped difference", [](std::string& d) {
        const double nb[] = {kTwoPi - 0.1};
        return near(rv_next_heading(0.1, nb), 0.0, 1e-9, d);
    }});

    checks.push_back({"advance_position: along +x", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        const Vec2 p = advance_position(make_agent(0, {0, 0}, 0.0), w);
        return near(p.x, 0.7, 1e-9, d) && near(p.y, 0.0, 1e-9, d);
    }});
    checks.push_back({"advance_position: along +y", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        const Vec2 p = advance_position(make_agent(0, {0, 0}, kPi / 2), w);
        return near(p.x, 0.0, 1e-9, d) && near(p.y, 0.7, 1e-9, d);
    }});
    checks.push_back({"advance_position: wraps the seam", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        const Vec2 p = advance_position(make_agent(0, {999.9, 500}, 0.0), w);
        return near(p.x, 0.6, 1e-9, d) && near(p.y, 500.0, 1e-9, d);
    }});

    checks.push_back({"step: isolated pair aligns and moves on new headings", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        std::vector<AgentState> agents{make_agent(0, {500, 500}, 0.0),
                                       make_agent(1, {505, 500}, kPi / 2)};
        Simulation sim(SimState{0, agents, w, 0}, BehaviorSpec{});
        sim.step();
        const auto& a = sim.agent_by_id(0);
        const auto& b = sim.agent_by_id(1);
        const Vec2 step_vec = 0.7 * unit_vec(kPi / 4);
        return near(a.heading, kPi / 4, 1e-9, d) && near(b.heading, kPi / 4, 1e-9, d) &&
               near(a.position.x, 500 + step_vec.x, 1e-9, d) &&
               near(a.position.y, 500 + step_vec.y, 1e-9, d) &&
               near(b.position.x, 505 + step_vec.x, 1e-9, d) &&
               near(b.position.y, 500 + step_vec.y, 1e-9, d);
    }});
    checks.push_back({"step: permuting storage order leaves trajectories unchanged",
                      [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        Rng rng(7);
        std::vector<AgentState> agents;
        for (int i = 0; i < 24; ++i)
            agents.push_back(make_agent(i, {rng.uniform(200.0), rng.uniform(200.0)},
                                        rng.uniform(kTwoPi)));
        std::vector<AgentState> reversed(agents.rbegin(), agents.rend());
        Simulation sim_a(SimState{0, agents, w, 0}, BehaviorSpec{});
        Simulation sim_b(SimState{0, reversed, w, 0}, BehaviorSpec{});
        for (int t = 0; t < 10; ++t) {
            sim_a.step();
            sim_b.step();
        }
        for (int i = 0; i < 24; ++i) {
            const auto& a = sim_a.agent_by_id(i);
            const auto& b = sim_b.agent_by_id(i);
            if (a.heading != b.heading || !(a.position == b.position))
                return expect(false, "per-id trajectory diverged under permutation", d);
        }
        return true;
    }});
    checks.push_back({"step: single agent travels straight", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        std::vector<AgentState> agents{make_agent(0, {500, 500}, 1.0)};
        Simulation sim(SimState{0, agents, w, 0}, BehaviorSpec{});
        sim.run(100);
        const Vec2 want = Vec2{500, 500} + 100 * 0.7 * unit_vec(1.0);
        const auto& a = sim.agent_by_id(0);
        return near(a.heading, 1.0, 1e-9, d) && near(a.position.x, want.x, 1e-9, d) &&
               near(a.position.y, want.y, 1e-9, d);
    }});
}

// --------------------------------------------------------------- placement --

void placement_checks(std::vector<ExampleCheck>& checks) {
    checks.push_back({"place_random: rectangle bounds", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        Rng rng(11);
        for (const Vec2& p : place_random_rect(1000, w, rng)) {
            if (p.x < 0 || p.x >= 1000 || p.y < 0 || p.y >= 1000)
                return expect(false, "position out of bounds", d);
        }
        return true;
    }});
    checks.push_back({"place_random: disc bounds and area uniformity", [](std::string& d) {
        const Vec2 o{2500, 2500};
        Rng rng(12);
        int inner = 0;
        const auto points = place_random_disc(1000, o, 500.0, rng);
        for (const Vec2& p : points) {
            const double dist = (p - o).norm();
            if (dist > 500.0 + 1e-9) return expect(false, "outside the disc", d);
            if (dist <= 250.0) ++inner;
        }
        return near(inner / 1000.0, 0.25, 0.05, d);
    }});
    checks.push_back({"place_random: deterministic under a fixed seed", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        Rng a(99), b(99);
        const auto pa = place_random_rect(100, w, a);
        const auto pb = place_random_rect(100, w, b);
        for (int i = 0; i < 100; ++i)
            if (!(pa[i] == pb[i])) return expect(false, "same seed, different draw", d);
        return true;
    }});

    checks.push_back({"place_grid: K=4 cell centers", [](std::string& d) {
        const auto got = place_grid(4, WorldSpec::large_preset());
        const std::vector<Vec2> want{{250, 250}, {750, 250}, {250, 750}, {750, 750}};
        for (int i = 0; i < 4; ++i)
            if (!near(got[i].x, want[i].x, 1e-9, d) || !near(got[i].y, want[i].y, 1e-9, d))
                return false;
        return true;
    }});
    checks.push_back({"place_grid: K=1 at the center", [](std::string& d) {
        const auto got = place_grid(1, WorldSpec::large_preset());
        return near(got[0].x, 500.0, 1e-9, d) && near(got[0].y, 500.0, 1e-9, d);
    }});
    checks.push_back({"place_grid: K=9 lattice", [](std::string& d) {
        const auto got = place_grid(9, WorldSpec::large_preset());
        const double c[3] = {166.67, 500.0, 833.33};
        for (int row = 0; row < 3; ++row)
            for (int col = 0; col < 3; ++col) {
                const Vec2& p = got[row * 3 + col];
                if (!near(p.x, c[col], 0.01, d) || !near(p.y, c[row], 0.01, d)) return false;
            }
        return true;
    }});

    checks.push_back({"place_kmeans: K=1 returns the centroid", [](std::string& d) {
        std::vector<Vec2> pts{{0, 0}, {10, 0}, {0, 10}, {10, 10}, {5, 5}};
        Rng rng(5);
        const auto centers = place_kmeans(1, pts, KMeansParams{}, rng);
        return near(centers[0].x, 5.0, 1e-9, d) && near(centers[0].y, 5.0, 1e-9, d);
    }});
    checks.push_back({"place_kmeans: K=N lands on the points", [](std::string& d) {
        std::vector<Vec2> pts{{0, 0}, {100, 0}, {0, 100}, {100, 100}, {50, 40}};
        Rng rng(6);
        auto centers = place_kmeans(static_cast<int>(pts.size()), pts, KMeansParams{}, rng);
        auto key = [](const Vec2& v) { return std::make_pair(v.x, v.y); };
        std::sort(centers.begin(), centers.end(),
                  [&](const Vec2& a, const Vec2& b) { return key(a) < key(b); });
        std::sort(pts.begin(), pts.end(),
                  [&](const Vec2& a, const Vec2& b) { return key(a) < key(b); });
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (!near(centers[i].x, pts[i].x, 1e-6, d) ||
                !near(centers[i].y, pts[i].y, 1e-6, d))
                return false;
        return true;
    }});
    checks.push_back({"place_kmeans: three blobs match exhaustive optimum", [](std::string& d) {
        // 12 points in 3 well-separated blobs; 3^12 assignments enumerated.
        std::vector<Vec2> pts;
        const Vec2 blobs[3] = {{100, 100}, {800, 150}, {450, 800}};
        Rng rng(17);
        for (const Vec2& blob : blobs)
            for (int i = 0; i < 4; ++i)
                pts.push_back(blob + Vec2{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)});
        std::vector<Vec2> best_centers;
        oracle::exhaustive_kmeans_sse(pts, 3, &best_centers);
        Rng krng(23);
        auto centers = place_kmeans(3, pts, KMeansParams{}, krng);
        auto key = [](const Vec2& v) { return std::make_pair(v.x, v.y); };
        std::sort(centers.begin(), centers.end(),
                  [&](const Vec2& a, const Vec2& b) { return key(a) < key(b); });
        std::sort(best_centers.begin(), best_centers.end(),
                  [&](const Vec2& a, const Vec2& b) { return key(a) < key(b); });
        for (int i = 0; i < 3; ++i)
            if (!near(centers[i].x, best_centers[i].x, 1e-6, d) ||
                !near(centers[i].y, best_centers[i].y, 1e-6, d))
                return false;
        return true;
    }});

    checks.push_back({"place_circle_border: K=4 compass points", [](std::string& d) {
        const auto got = place_circle_border(4, {2500, 2500}, 500.0);
        const std::vector<Vec2> want{{3000, 2500}, {2500, 3000}, {2000, 2500}, {2500, 2000}};
        for (int i = 0; i < 4; ++i)
            if (!near(got[i].x, want[i].x, 1e-9, d) || !near(got[i].y, want[i].y, 1e-9, d))
                return false;
        return true;
    }});
    checks.push_back({"place_circle_border: all on the circle", [](std::string& d) {
        const Vec2 o{2500, 2500};
        for (const Vec2& p : place_circle_border(16, o, 750.0))
            if (!near((p - o).norm(), 750.0, 1e-9, d)) return false;
        return true;
    }});
    checks.push_back({"place_circle_border: K=1 at angle zero", [](std::string& d) {
        const auto got = place_circle_border(1, {2500, 2500}, 500.0);
        return near(got[0].x, 3000.0, 1e-9, d) && near(got[0].y, 2500.0, 1e-9, d);
    }});

    checks.push_back({"place_sunflower: last agent at the full radius", [](std::string& d) {
        const Vec2 o{2500, 2500};
        const auto got = place_sunflower(37, o, 500.0);
        return near((got.back() - o).norm(), 500.0, 1e-9, d);
    }});
    checks.push_back({"place_sunflower: n=4 of K=100", [](std::string& d) {
        const Vec2 o{2500, 2500};
        const auto got = place_sunflower(100, o, 500.0);
        const Vec2 rel = got[3] - o;
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        const double want_angle = std::fmod(4.0 * kTwoPi / (phi * phi), kTwoPi);
        const double angle = wrap_angle(std::atan2(rel.y, rel.x));
        return near(rel.norm(), 100.0, 1e-9, d) && near(angle, want_angle, 1e-9, d) &&
               near(angle, 3.3167, 1e-4, d);
    }});
    checks.push_back({"place_sunflower: radii strictly increase", [](std::string& d) {
        const Vec2 o{2500, 2500};
        const auto got = place_sunflower(50, o, 500.0);
        for (std::size_t i = 1; i < got.size(); ++i)
            if ((got[i] - o).norm() <= (got[i - 1] - o).norm())
                return expect(false, "radius not increasing", d);
        return true;
    }});

    checks.push_back({"init_rv_agents: herd starts inside the radius-500 disc",
                      [](std::string& d) {
        Rng rng(31);
        const Vec2 center{2500, 2500};
        for (const auto& a : init_rv_agents(Setting::Herd, 300, rng))
            if ((a.position - center).norm() > 500.0 + 1e-9)
                return expect(false, "agent outside the herd disc", d);
        return true;
    }});
    checks.push_back({"init_rv_agents: large stays on the grid", [](std::string& d) {
        Rng rng(32);
        for (const auto& a : init_rv_agents(Setting::Large, 300, rng))
            if (a.position.x < 0 || a.position.x >= 1000 || a.position.y < 0 ||
                a.position.y >= 1000)
                return expect(false, "agent outside the grid", d);
        return true;
    }});
    checks.push_back({"init_rv_agents: headings uniform (chi-square)", [](std::string& d) {
        Rng rng(33);
        const auto agents = init_rv_agents(Setting::Large, 10000, rng);
        const int bins = 16;
        std::vector<int> counts(bins, 0);
        for (const auto& a : agents)
            ++counts[std::min(bins - 1, static_cast<int>(a.heading / kTwoPi * bins))];
        const double expected = 10000.0 / bins;
        double stat = 0.0;
        for (int c : counts) stat += (c - expected) * (c - expected) / expected;
        // chi-square critical value, 15 dof, p = 0.01
        return expect(stat < 30.578, "heading histogram not uniform", d);
    }});
}

// --------------------------------------------------------------- behaviors --

void behavior_checks(std::vector<ExampleCheck>& checks) {
    checks.push_back({"act_face: returns the goal", [](std::string& d) {
        BehaviorSpec spec;
        spec.goal_theta = 0.0;
        return near(act_face(spec), 0.0, 1e-9, d);
    }});
    checks.push_back({"act_face: ignores everything else", [](std::string& d) {
        BehaviorSpec spec;
        spec.goal_theta = 3 * kPi / 2;
        return near(act_face(spec), 3 * kPi / 2, 1e-9, d);
    }});
    checks.push_back({"act_face: constant across steps", [](std::string& d) {
        BehaviorSpec spec;
        spec.goal_theta = 1.25;
        for (int i = 0; i < 5; ++i)
            if (!near(act_face(spec), 1.25, 1e-9, d)) return false;
        return true;
    }});

    checks.push_back({"act_offset_momentum: no neighbors falls back to goal",
                      [](std::string& d) {
        return near(act_offset_momentum({}, 1.1, 0.7), 1.1, 1e-9, d);
    }});
    checks.push_back({"act_offset_momentum: opposing mean velocity", [](std::string& d) {
        const Vec2 v[] = {0.7 * unit_vec(kPi), 0.7 * unit_vec(kPi)};
        return near(act_offset_momentum(v, 0.0, 0.7), 0.0, 1e-9, d);
    }});
    checks.push_back({"act_offset_momentum: perpendicular mean velocity", [](std::string& d) {
        const Vec2 v[] = {Vec2{0.0, 0.7}};
        return near(act_offset_momentum(v, 0.0, 0.7), 7 * kPi / 4, 1e-9, d);
    }});

    checks.push_back({"act_lookahead: no neighbors faces the goal", [](std::string& d) {
        return near(act_lookahead(0.3, 64, {}), 0.3, 1e-9, d);
    }});
    checks.push_back({"act_lookahead: single captive neighbor", [](std::string& d) {
        // One neighbor at pi/2 whose only neighbor is the influencer: the
        // exhaustive re-scan picks candidate 49 of 64 (49*pi/32), which turns
        // the neighbor to pi/64.
        std::vector<SimulatedNeighbor> nbs(1);
        nbs[0].heading = kPi / 2;
        const double chosen = act_lookahead(0.0, 64, nbs);
        int best_k = 0;
        double best_obj = 1e300;
        for (int k = 0; k < 64; ++k) {
            const double c = oracle::candidate(0.0, k, 64);
            const double obj = oracle::lookahead_objective(nbs, 0.0, c, c);
            if (obj < best_obj) {
                best_obj = obj;
                best_k = k;
            }
        }
        if (!expect(best_k == 49, "oracle argmin moved", d)) return false;
        if (!near_angle(chosen, 49.0 * kPi / 32, 1e-9, d)) return false;
        const double next = rv_next_heading(kPi / 2, std::vector<double>{chosen});
        return near(next, kPi / 64, 1e-9, d);
    }});
    checks.push_back({"act_lookahead: symmetric neighbors tie toward the goal",
                      [](std::string& d) {
        const double delta = 0.3;
        std::vector<SimulatedNeighbor> nbs(2);
        nbs[0].heading = wrap_angle(delta);
        nbs[1].heading = wrap_angle(-delta);
        return near(act_lookahead(0.0, 64, nbs), 0.0, 1e-9, d);
    }});

    checks.push_back({"pair_influencers: two make one pair", [](std::string& d) {
        const int ids[] = {5, 9};
        const Vec2 pos[] = {Vec2{0, 0}, Vec2{4, 0}};
        const auto pairs = pair_influencers(ids, pos, WorldSpec::herd_preset());
        return expect(pairs.size() == 1 && pairs[0] == std::make_pair(5, 9), "bad pairing", d);
    }});
    checks.push_back({"pair_influencers: collinear greedy leftover", [](std::string& d) {
        const int ids[] = {0, 1, 2};
        const Vec2 pos[] = {Vec2{0, 0}, Vec2{1, 0}, Vec2{10, 0}};
        const auto pairs = pair_influencers(ids, pos, WorldSpec::herd_preset());
        return expect(pairs.size() == 1 && pairs[0] == std::make_pair(0, 1),
                      "expected {0,1} paired, 2 leftover", d);
    }});
    checks.push_back({"pair_influencers: four make two disjoint pairs", [](std::string& d) {
        const int ids[] = {0, 1, 2, 3};
        const Vec2 pos[] = {Vec2{0, 0}, Vec2{1, 0}, Vec2{100, 0}, Vec2{102, 0}};
        const auto pairs = pair_influencers(ids, pos, WorldSpec::herd_preset());
        std::vector<int> seen;
        for (auto [a, b] : pairs) {
            seen.push_back(a);
            seen.push_back(b);
        }
        std::sort(seen.begin(), seen.end());
        return expect(pairs.size() == 2 && seen == std::vector<int>{0, 1, 2, 3},
                      "each agent must appear in exactly one pair", d);
    }});

    checks.push_back({"act_coordinated: no neighbors face the goal", [](std::string& d) {
        const auto [a, b] = act_coordinated(0.4, 16, {});
        return near(a, 0.4, 1e-9, d) && near(b, 0.4, 1e-9, d);
    }});
    checks.push_back({"act_coordinated: disjoint neighborhoods match solo scans",
                      [](std::string& d) {
        std::vector<SimulatedNeighbor> nbs(2);
        nbs[0].heading = 1.1;
        nbs[0].sees_first = true;
        nbs[0].sees_second = false;
        nbs[1].heading = 4.2;
        nbs[1].sees_first = false;
        nbs[1].sees_second = true;
        const auto [a, b] = act_coordinated(0.0, 16, nbs);
        std::vector<SimulatedNeighbor> only_a{nbs[0]};
        std::vector<SimulatedNeighbor> only_b{nbs[1]};
        only_b[0].sees_first = true;
        only_b[0].sees_second = false;
        return near(a, act_lookahead(0.0, 16, only_a), 1e-9, d) &&
               near(b, act_lookahead(0.0, 16, only_b), 1e-9, d);
    }});
    checks.push_back({"act_coordinated: shared captive neighbor", [](std::string& d) {
        // Both pair members within r of one RV agent at pi/2: the 256-cell scan
        // picks candidate 13 of 16 (13*pi/8) for both.
        std::vector<SimulatedNeighbor> nbs(1);
        nbs[0].heading = kPi / 2;
        nbs[0].sees_first = nbs[0].sees_second = true;
        const auto [a, b] = act_coordinated(0.0, 16, nbs);
        double best = 1e300;
        int bi = 0, bj = 0;
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) {
                const double obj = oracle::lookahead_objective(
                    nbs, 0.0, oracle::candidate(0.0, i, 16), oracle::candidate(0.0, j, 16));
                if (obj < best) {
                    best = obj;
                    bi = i;
                    bj = j;
                }
            }
        if (!expect(bi == 13 && bj == 13, "oracle argmin moved", d)) return false;
        return near_angle(a, 13 * kPi / 8, 1e-9, d) && near_angle(b, 13 * kPi / 8, 1e-9, d);
    }});

    checks.push_back({"local_connected_count: one agent in range", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0, AgentKind::Influencer),
                                       make_agent(1, {109, 100}, 0)};
        SpatialIndex index(w, w.neighborhood_radius);
        index.build(agents);
        const auto est = local_connected_count(agents[0], index, id_table(agents), w);
        return expect(est.count == 1, "expected 1 connected agent", d);
    }});
    checks.push_back({"local_connected_count: chain inside the sensing ball",
                      [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0, AgentKind::Influencer),
                                       make_agent(1, {109, 100}, 0),
                                       make_agent(2, {118, 100}, 0)};
        SpatialIndex index(w, w.neighborhood_radius);
        index.build(agents);
        const auto est = local_connected_count(agents[0], index, id_table(agents), w);
        return expect(est.count == 2 && est.reached == std::vector<int>{1, 2},
                      "expected the 2-link chain", d);
    }});
    checks.push_back({"local_connected_count: outside the sensing ball", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0, AgentKind::Influencer),
                                       make_agent(1, {125, 100}, 0)};
        SpatialIndex index(w, w.neighborhood_radius);
        index.build(agents);
        const auto est = local_connected_count(agents[0], index, id_table(agents), w);
        return expect(est.count == 0, "agent beyond 2r still counted", d);
    }});

    checks.push_back({"multistep: follower moves exactly like an RV agent", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        BehaviorSpec ms;
        ms.kind = BehaviorKind::Multistep;
        ms.threshold_frac = 100.0;  // never latches
        std::vector<AgentState> as_inf{make_agent(0, {500, 500}, 0.3),
                                       make_agent(1, {500, 200}, 1.0, AgentKind::Influencer)};
        std::vector<AgentState> as_rv{make_agent(0, {500, 500}, 0.3),
                                      make_agent(1, {500, 200}, 1.0)};
        Simulation sim_inf(SimState{0, as_inf, w, 0}, ms);
        Simulation sim_rv(SimState{0, as_rv, w, 0}, BehaviorSpec{});
        for (int t = 0; t < 50; ++t) {
            sim_inf.step();
            sim_rv.step();
        }
        const auto& a = sim_inf.agent_by_id(1);
        const auto& b = sim_rv.agent_by_id(1);
        return expect(a.heading == b.heading && a.position == b.position,
                      "follow phase diverged from the RV rule", d);
    }});
    checks.push_back({"multistep: disjoint estimates 3+2 cross T=5", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        BehaviorSpec ms;
        ms.kind = BehaviorKind::Multistep;
        ms.threshold_frac = 1.0;  // T = 5 with 5 RV agents
        std::vector<AgentState> agents{
            make_agent(0, {105, 100}, 0), make_agent(1, {110, 100}, 0),
            make_agent(2, {115, 100}, 0), make_agent(3, {305, 300}, 0),
            make_agent(4, {310, 300}, 0),
            make_agent(5, {100, 100}, 0, AgentKind::Influencer),
            make_agent(6, {300, 300}, 0, AgentKind::Influencer)};
        Simulation sim(SimState{0, agents, w, 0}, ms);
        sim.step();
        return expect(sim.multistep_latched() && sim.last_connectivity_sum() == 5,
                      "latch should fire at sum 5 >= T 5", d);
    }});
    checks.push_back({"multistep: latched goal is the circular mean", [](std::string& d) {
        const auto w = WorldSpec::large_preset();
        BehaviorSpec ms;
        ms.kind = BehaviorKind::Multistep;
        ms.threshold_frac = 1.0;  // T = 2 with 2 RV agents
        std::vector<AgentState> agents{
            make_agent(0, {105, 100}, 0.0), make_agent(1, {110, 100}, kPi / 2),
            make_agent(2, {100, 100}, kPi / 4, AgentKind::Influencer)};
        Simulation sim(SimState{0, agents, w, 0}, ms);
        sim.step();
        if (!expect(sim.multistep_latched(), "latch should fire", d)) return false;
        return near(sim.agent_by_id(2).phase.influence_goal, kPi / 4, 1e-9, d);
    }});

    checks.push_back({"act_circle: on-circle waypoint heading", [](std::string& d) {
        const Vec2 o{2500, 2500};
        const auto h = act_circle({3000, 2500}, o, 500.0, 0.7);
        if (!expect(h.has_value(), "tangent undefined", d)) return false;
        // chord geometry: heading = pi/2 + (s / r) / 2 exactly
        return near(*h, kPi / 2 + 0.0007, 1e-9, d);
    }});
    checks.push_back({"act_circle: converges onto the circle from inside", [](std::string& d) {
        const Vec2 o{2500, 2500};
        Vec2 pos{2900, 2500};  // radius 400, target 500
        double heading = 0.0;
        for (int t = 0; t < 2000; ++t) {
            heading = act_circle(pos, o, 500.0, 0.7).value_or(heading);
            pos += 0.7 * unit_vec(heading);
        }
        return near((pos - o).norm(), 500.0, 1.0, d);
    }});
    checks.push_back({"act_circle: no drift over 10k steps", [](std::string& d) {
        const Vec2 o{2500, 2500};
        Vec2 pos{3000, 2500};
        double heading = kPi / 2;
        for (int t = 0; t < 10000; ++t) {
            heading = act_circle(pos, o, 500.0, 0.7).value_or(heading);
            pos += 0.7 * unit_vec(heading);
        }
        return near((pos - o).norm(), 500.0, 1.0, d);
    }});

    checks.push_back({"act_polygon: heads for the target vertex", [](std::string& d) {
        const Vec2 o{2500, 2500};
        const double r = 500.0;
        const Vec2 v0 = o + r * unit_vec(0.0);
        const Vec2 v1 = o + r * unit_vec(kTwoPi / 10);
        auto [heading, target] = act_polygon(1, v0, o, r, 10, 0.7, 0.0);
        const Vec2 dir = v1 - v0;
        return expect(target == 1, "target advanced prematurely", d) &&
               near(heading, wrap_angle(std::atan2(dir.y, dir.x)), 1e-9, d);
    }});
    checks.push_back({"act_polygon: advances within one step of the vertex", [](std::string& d) {
        const Vec2 o{2500, 2500};
        const double r = 500.0;
        const Vec2 v1 = o + r * unit_vec(kTwoPi / 10);
        auto [heading, target] = act_polygon(1, v1 + Vec2{0.3, 0.0}, o, r, 10, 0.7, 0.0);
        (void)heading;
        return expect(target == 2, "target should advance to v2", d);
    }});
    checks.push_back({"act_polygon: decagon turn angle", [](std::string& d) {
        const Vec2 o{2500, 2500};
        const double r = 500.0;
        for (int k = 0; k < 10; ++k) {
            const Vec2 a = o + r * unit_vec(kTwoPi * k / 10);
            const Vec2 b = o + r * unit_vec(kTwoPi * (k + 1) / 10);
            const Vec2 c = o + r * unit_vec(kTwoPi * (k + 2) / 10);
            const double h1 = std::atan2((b - a).y, (b - a).x);
            const double h2 = std::atan2((c - b).y, (c - b).x);
            if (!near(std::abs(angle_diff(h2, h1)), kTwoPi / 10, 1e-9, d)) return false;
        }
        return true;
    }});

    checks.push_back({"multicircle: no contact keeps circling at the placement radius",
                      [](std::string& d) {
        const auto w = WorldSpec::herd_preset();
        BehaviorSpec mc;
        mc.kind = BehaviorKind::Multicircle;
        mc.final_radius = 900.0;
        std::vector<AgentState> agents{
            make_agent(0, {500, 500}, 0.0),  // far away, never encountered
            make_agent(1, {3000, 2500}, kPi / 2, AgentKind::Influencer)};
        Simulation sim(SimState{0, agents, w, 0}, mc);
        sim.run(2000);
        const auto& inf = sim.agent_by_id(1);
        return expect(inf.phase.multicircle == MulticircleStage::CirclingInitial,
                      "phase should stay in the initial circling stage", d) &&
               near((inf.position - Vec2{2500, 2500}).norm(), 500.0, 1.0, d);
    }});
    checks.push_back({"multicircle: switches to following on contact", [](std::string& d) {
        const auto w = WorldSpec::herd_preset();
        BehaviorSpec mc;
        mc.kind = BehaviorKind::Multicircle;
        mc.final_radius = 900.0;
        std::vector<AgentState> agents{
            make_agent(0, {3005, 2500}, 0.0),
            make_agent(1, {3000, 2500}, kPi / 2, AgentKind::Influencer)};
        Simulation sim(SimState{0, agents, w, 0}, mc);
        sim.step();
        return expect(sim.agent_by_id(1).phase.multicircle == MulticircleStage::Following,
                      "contact within r should switch the phase", d);
    }});
    checks.push_back({"multicircle: final stage circles at the final radius",
                      [](std::string& d) {
        const auto w = WorldSpec::herd_preset();
        BehaviorSpec mc;
        mc.kind = BehaviorKind::Multicircle;
        mc.final_radius = 900.0;
        AgentState inf = make_agent(1, {2500 + 950, 2500}, 0.0, AgentKind::Influencer);
        inf.phase.multicircle = MulticircleStage::Following;  // mid-run state
        inf.phase.orbit_radius = 500.0;
        std::vector<AgentState> agents{make_agent(0, {500, 500}, 0.0), inf};
        Simulation sim(SimState{0, agents, w, 0}, mc);
        sim.step();
        if (!expect(sim.agent_by_id(1).phase.multicircle == MulticircleStage::CirclingFinal,
                    "distance beyond the final radius should latch the final stage", d))
            return false;
        // From here the agent tracks circle(O, 900): over many steps it stays
        // near radius 900 even though it started at 950.
        sim.run(4000);
        const double rad = (sim.agent_by_id(1).position - Vec2{2500, 2500}).norm();
        return near(rad, 900.0, 2.0, d);
    }});
}

// ----------------------------------------------------------------- metrics --

void metrics_checks(std::vector<ExampleCheck>& checks) {
    const auto w = WorldSpec::large_preset();

    checks.push_back({"proximity_components: chain forms one component", [w](std::string& d) {
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0),
                                       make_agent(1, {109, 100}, 0),
                                       make_agent(2, {118, 100}, 0)};
        const auto comps = proximity_components(agents, 10.0, w);
        return expect(comps.size() == 1 && comps[0] == std::vector<int>{0, 1, 2},
                      "chain should be one component", d);
    }});
    checks.push_back({"proximity_components: distant pair stays separate", [w](std::string& d) {
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0),
                                       make_agent(1, {111, 100}, 0)};
        const auto comps = proximity_components(agents, 10.0, w);
        return expect(comps.size() == 2, "expected two singletons", d);
    }});
    checks.push_back({"proximity_components: random instance matches brute force",
                      [w](std::string& d) {
        Rng rng(55);
        std::vector<AgentState> agents;
        for (int i = 0; i < 100; ++i)
            agents.push_back(make_agent(i, {rng.uniform(300.0), rng.uniform(300.0)},
                                        rng.uniform(kTwoPi)));
        const auto got = proximity_components(agents, 10.0, w);
        const auto want = oracle::components(agents, 10.0, w, false, 0.0);
        return expect(got == want, "components differ from brute force", d);
    }});

    checks.push_back({"flock_count: aligned pair forms a flock", [w](std::string& d) {
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0.0),
                                       make_agent(1, {105, 100}, 0.05)};
        return expect(flock_count(agents, 10.0, 0.1, w) == 1, "expected one flock", d);
    }});
    checks.push_back({"flock_count: misaligned pair is no flock", [w](std::string& d) {
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0.0),
                                       make_agent(1, {105, 100}, kPi)};
        return expect(flock_count(agents, 10.0, 0.1, w) == 0, "opposite headings flocked", d);
    }});
    checks.push_back({"flock_count: aligned chain of three", [w](std::string& d) {
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0.0),
                                       make_agent(1, {107, 100}, 0.02),
                                       make_agent(2, {114, 100}, 0.04)};
        return expect(flock_count(agents, 10.0, 0.1, w) == 1, "expected one flock of 3", d);
    }});

    checks.push_back({"lone_count: single agent is lone", [w](std::string& d) {
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0)};
        return expect(lone_count(agents, 10.0, w) == 1, "single agent must be lone", d);
    }});
    checks.push_back({"lone_count: proximity alone defines neighbors", [w](std::string& d) {
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0.0),
                                       make_agent(1, {105, 100}, kPi)};
        return expect(lone_count(agents, 10.0, w) == 0, "heading must not matter", d);
    }});
    checks.push_back({"lone_count: all pairwise distant", [w](std::string& d) {
        std::vector<AgentState> agents;
        for (int i = 0; i < 8; ++i) agents.push_back(make_agent(i, {i * 50.0, 100}, 0));
        return expect(lone_count(agents, 10.0, w) == 8, "every agent should be lone", d);
    }});

    checks.push_back({"max_aligned_group: identical headings", [](std::string& d) {
        std::vector<double> h(12, 2.2);
        const auto [count, dir] = max_aligned_group(h, 0.1);
        return expect(count == 12, "expected all aligned", d) && near(dir, 2.2, 1e-9, d);
    }});
    checks.push_back({"max_aligned_group: brute-force window", [](std::string& d) {
        const std::vector<double> h{0.0, 0.05, kPi};
        const auto [count, dir] = max_aligned_group(h, 0.1);
        (void)dir;
        return expect(count == 2 && count == oracle::max_aligned(h, 0.1),
                      "expected count 2", d);
    }});
    checks.push_back({"max_aligned_group: pairwise distant headings", [](std::string& d) {
        const std::vector<double> h{0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
        const auto [count, dir] = max_aligned_group(h, 0.1);
        (void)dir;
        return expect(count == 1, "expected singletons only", d);
    }});

    checks.push_back({"convergence_step: first crossing", [](std::string& d) {
        std::vector<MetricSample> samples;
        for (int i = 0; i <= 20; ++i) {
            MetricSample s;
            s.step = i * 100;
            s.max_aligned_count = i * 100 >= 1700 ? 160 : 60;
            samples.push_back(s);
        }
        const auto res = convergence_step(samples, 300, 2000);
        return expect(!res.censored && res.step == 1700, "expected first crossing at 1700", d);
    }});
    checks.push_back({"convergence_step: censored at the cap", [](std::string& d) {
        std::vector<MetricSample> samples(5);
        for (int i = 0; i < 5; ++i) {
            samples[i].step = i * 100;
            samples[i].max_aligned_count = 10;
        }
        const auto res = convergence_step(samples, 300, 6000);
        return expect(res.censored && res.step == 6000, "expected censoring", d);
    }});
    checks.push_back({"convergence_step: crossing at the first sample", [](std::string& d) {
        std::vector<MetricSample> samples(1);
        samples[0].step = 0;
        samples[0].max_aligned_count = 150;
        const auto res = convergence_step(samples, 300, 6000);
        return expect(!res.censored && res.step == 0, "expected step 0", d);
    }});

    checks.push_back({"controlled_count: aligned and connected", [w](std::string& d) {
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0.05),
                                       make_agent(1, {105, 100}, 0.0, AgentKind::Influencer)};
        return expect(controlled_count(agents, 10.0, 0.1, w) == 1, "expected control", d);
    }});
    checks.push_back({"controlled_count: connected but misaligned", [w](std::string& d) {
        std::vector<AgentState> agents{make_agent(0, {100, 100}, kPi),
                                       make_agent(1, {105, 100}, 0.0, AgentKind::Influencer)};
        return expect(controlled_count(agents, 10.0, 0.1, w) == 0, "misaligned counted", d);
    }});
    checks.push_back({"controlled_count: aligned but disconnected", [w](std::string& d) {
        std::vector<AgentState> agents{make_agent(0, {100, 100}, 0.0),
                                       make_agent(1, {400, 400}, 0.0, AgentKind::Influencer)};
        return expect(controlled_count(agents, 10.0, 0.1, w) == 0, "disconnected counted", d);
    }});
}

// ----------------------------------------------------------------- harness --

void harness_checks(std::vector<ExampleCheck>& checks) {
    checks.push_back({"parse_config: minimal config fills defaults", [](std::string& d) {
        const auto cfg = parse_config(R"({"setting": "large", "behavior": "face"})");
        return expect(cfg.rv_count == 300 && cfg.trials == 100 && cfg.sample_interval == 100 &&
                          cfg.inf_count == 0 && cfg.epsilon_align == 0.1,
                      "documented defaults missing", d);
    }});
    checks.push_back({"parse_config: multistep in the herd is rejected", [](std::string& d) {
        try {
            parse_config(R"({"setting": "herd", "behavior": "multistep:face"})");
        } catch (const ConfigError& e) {
            return expect(e.code() == ConfigErrorCode::SettingMismatch, "wrong error code", d);
        }
        return expect(false, "mismatch not diagnosed", d);
    }});
    checks.push_back({"parse_config: circular placement needs the herd", [](std::string& d) {
        try {
            parse_config(R"({"setting": "large", "placement": "circle-border"})");
        } catch (const ConfigError& e) {
            return expect(e.code() == ConfigErrorCode::SettingMismatch, "wrong error code", d);
        }
        return expect(false, "mismatch not diagnosed", d);
    }});

    checks.push_back({"run_trial: bit-identical reruns", [](std::string& d) {
        auto cfg = parse_config(R"({"setting": "large", "behavior": "face",
            "rv_count": 40, "inf_count": 4, "placement": "grid",
            "steps": 300, "trials": 1, "seed": 7})");
        const auto cells = expand_cells(cfg);
        const auto a = run_trial(cfg, cells[0], 0);
        const auto b = run_trial(cfg, cells[0], 0);
        if (!expect(a.seed == b.seed && a.samples.size() == b.samples.size(), "shape", d))
            return false;
        for (std::size_t i = 0; i < a.samples.size(); ++i) {
            if (a.samples[i].flock_count != b.samples[i].flock_count ||
                a.samples[i].lone_fraction != b.samples[i].lone_fraction ||
                a.samples[i].max_aligned_count != b.samples[i].max_aligned_count)
                return expect(false, "samples differ between identical runs", d);
        }
        return true;
    }});
    checks.push_back({"run_trial: different trials draw different worlds", [](std::string& d) {
        auto cfg = parse_config(R"({"setting": "large", "behavior": "face", "rv_count": 50})");
        const std::uint64_t s0 = trial_seed(cfg, 0, 0);
        const std::uint64_t s1 = trial_seed(cfg, 0, 1);
        if (!expect(s0 != s1, "seeds must differ", d)) return false;
        Rng r0(mix64(s0, 1)), r1(mix64(s1, 1));
        const auto a0 = init_rv_agents(Setting::Large, 50, r0);
        const auto a1 = init_rv_agents(Setting::Large, 50, r1);
        for (int i = 0; i < 50; ++i)
            if (!(a0[i].position == a1[i].position)) return true;
        return expect(false, "initial positions identical across trials", d);
    }});
    checks.push_back({"run_trial: zero influencers runs the plain protocol", [](std::string& d) {
        auto cfg = parse_config(R"({"setting": "large", "behavior": "face",
            "rv_count": 30, "inf_count": 0, "steps": 200, "trials": 1})");
        const auto cells = expand_cells(cfg);
        const auto res = run_trial(cfg, cells[0], 0);
        if (!expect(res.samples.size() == 3, "expected samples at 0/100/200", d)) return false;
        for (const auto& s : res.samples)
            if (s.controlled_count != 0)
                return expect(false, "controlled agents without influencers", d);
        return true;
    }});

    checks.push_back({"run_sweep: influencer axis spans ten cells", [](std::string& d) {
        auto cfg = parse_config(R"({"setting": "large", "behavior": "face", "steps": 0,
            "trials": 2, "sweep": {"inf_count": [10,20,30,40,50,60,70,80,90,100]}})");
        const auto results = run_sweep(cfg);
        if (!expect(results.cells.size() == 10, "expected 10 cells", d)) return false;
        for (const auto& trials : results.trials)
            if (!expect(trials.size() == 2, "expected 2 trials per cell", d)) return false;
        return true;
    }});
    checks.push_back({"run_sweep: thread count cannot change the bytes", [](std::string& d) {
        const char* base = R"({"setting": "large", "behavior": "face", "rv_count": 40,
            "inf_count": 4, "placement": "grid", "steps": 300, "trials": 4, "seed": 3,
            "threads": %d})";
        char buf[512];
        std::snprintf(buf, sizeof(buf), base, 1);
        auto cfg1 = parse_config(buf);
        std::snprintf(buf, sizeof(buf), base, 8);
        auto cfg8 = parse_config(buf);
        std::ostringstream ts1, ts8, cv1, cv8;
        const auto r1 = run_sweep(cfg1);
        const auto r8 = run_sweep(cfg8);
        write_timeseries_csv(ts1, r1);
        write_timeseries_csv(ts8, r8);
        write_convergence_csv(cv1, r1);
        write_convergence_csv(cv8, r8);
        return expect(ts1.str() == ts8.str() && cv1.str() == cv8.str(),
                      "thread count changed the output bytes", d);
    }});
    checks.push_back({"run_sweep: herd grid of 3 circular placements x 2 radii",
                      [](std::string& d) {
        auto cfg = parse_config(R"({"setting": "herd", "behavior": "circle", "steps": 0,
            "trials": 1, "sweep": {"placement": ["circle-border","circle-random","circle-grid"],
            "placement_radius": [500, 750]}})");
        const auto results = run_sweep(cfg);
        if (!expect(results.cells.size() == 6, "expected the 3x2 grid", d)) return false;
        std::vector<std::string> labels;
        for (const auto& c : results.cells) labels.push_back(c.label);
        std::sort(labels.begin(), labels.end());
        return expect(std::unique(labels.begin(), labels.end()) == labels.end(),
                      "cell labels must be distinct", d);
    }});

    checks.push_back({"summarize: mean and SEM of {100, 200}", [](std::string& d) {
        SweepResults results;
        results.config = parse_config(R"({"setting": "large", "behavior": "face"})");
        Cell cell;
        cell.label = "cell";
        results.cells.push_back(cell);
        results.trials.resize(1);
        for (int t = 0; t < 2; ++t) {
            TrialResult tr;
            tr.trial = t;
            tr.convergence = {t == 0 ? 100 : 200, false};
            MetricSample s;
            s.step = 0;
            s.flock_count = t == 0 ? 100 : 200;
            tr.samples.push_back(s);
            results.trials[0].push_back(tr);
        }
        for (const auto& row : summarize(results)) {
            if (row.metric == "convergence_step") {
                if (!near(row.mean, 150.0, 1e-9, d) || !near(row.sem, 50.0, 1e-9, d))
                    return false;
            }
            if (row.metric == "flock_count" && row.step == 0) {
                if (!near(row.mean, 150.0, 1e-9, d) || !near(row.sem, 50.0, 1e-9, d))
                    return false;
            }
        }
        return true;
    }});
    checks.push_back({"summarize: single trial flags SEM 0", [](std::string& d) {
        SweepResults results;
        results.config = parse_config(R"({"setting": "large", "behavior": "face"})");
        Cell cell;
        cell.label = "cell";
        results.cells.push_back(cell);
        results.trials.resize(1);
        TrialResult tr;
        tr.convergence = {1200, false};
        MetricSample s;
        s.step = 0;
        tr.samples.push_back(s);
        results.trials[0].push_back(tr);
        for (const auto& row : summarize(results)) {
            if (row.metric == "convergence_step")
                return expect(row.sem == 0.0 && row.single_trial, "single-trial flag", d);
        }
        return expect(false, "row missing", d);
    }});
    checks.push_back({"summarize: every trial censored", [](std::string& d) {
        SweepResults results;
        results.config = parse_config(R"({"setting": "large", "behavior": "face"})");
        Cell cell;
        cell.label = "cell";
        results.cells.push_back(cell);
        results.trials.resize(1);
        for (int t = 0; t < 3; ++t) {
            TrialResult tr;
            tr.convergence = {6000, true};
            MetricSample s;
            s.step = 0;
            tr.samples.push_back(s);
            results.trials[0].push_back(tr);
        }
        bool conv_ok = false, cens_ok = false;
        for (const auto& row : summarize(results)) {
            if (row.metric == "convergence_step") conv_ok = !row.has_value;
            if (row.metric == "censored_trials") cens_ok = row.mean == 3.0;
        }
        return expect(conv_ok && cens_ok, "censored convention broken", d);
    }});
}

}  // namespace

const std::vector<ExampleCheck>& spec_example_checks() {
    static const std::vector<ExampleCheck> checks = [] {
        std::vector<ExampleCheck> all;
        geometry_checks(all);
        placement_checks(all);
        behavior_checks(all);
        metrics_checks(all);
        harness_checks(all);
        return all;
    }();
    return checks;
}

}  // namespace flock_tests
