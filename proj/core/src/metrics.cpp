#include "flock/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "flock/angles.hpp"
#include "flock/spatial_index.hpp"
#include "flock/union_find.hpp"

namespace flock {

namespace {

int max_agent_id(std::span<const AgentState> agents) {
    int m = -1;
    for (const auto& a : agents) m = std::max(m, a.id);
    return m;
}

std::vector<const AgentState*> id_table(std::span<const AgentState> agents) {
    std::vector<const AgentState*> by_id(static_cast<std::size_t>(max_agent_id(agents)) + 1,
                                         nullptr);
    for (const auto& a : agents) by_id[a.id] = &a;
    return by_id;
}

UnionFind unite_by(std::span<const AgentState> agents, double r, const WorldSpec& world,
                   bool require_alignment, double eps_align) {
    SpatialIndex index(world, r);
    index.build(agents);
    UnionFind uf(max_agent_id(agents) + 1);
    auto by_id = id_table(agents);
    std::vector<int> buf;
    for (const auto& a : agents) {
        index.query(a.position, r, a.id, buf);
        for (int j : buf) {
            if (require_alignment &&
                std::abs(angle_diff(by_id[j]->heading, a.heading)) > eps_align)
                continue;
            uf.unite(a.id, j);
        }
    }
    return uf;
}

}  // namespace

std::vector<std::vector<int>> proximity_components(std::span<const AgentState> agents, double r,
                                                   const WorldSpec& world) {
    if (agents.empty()) return {};
    UnionFind uf = unite_by(agents, r, world, false, 0.0);
    std::map<int, std::vector<int>> by_root;
    std::vector<int> ids;
    ids.reserve(agents.size());
    for (const auto& a : agents) ids.push_back(a.id);
    std::sort(ids.begin(), ids.end());
    for (int id : ids) by_root[uf.find(id)].push_back(id);

    std::vector<std::vector<int>> components;
    components.reserve(by_root.size());
    std::vector<std::pair<int, std::vector<int>>> ordered;
    for (auto& [root, members] : by_root)
        ordered.emplace_back(members.front(), std::move(members));
    std::sort(ordered.begin(), ordered.end());
    for (auto& [min_id, members] : ordered) components.push_back(std::move(members));
    return components;
}

int flock_count(std::span<const AgentState> agents, double r, double eps_align,
                const WorldSpec& world, bool proximity_only) {
    if (agents.empty()) return 0;
    UnionFind uf = unite_by(agents, r, world, !proximity_only, eps_align);
    int flocks = 0;
    for (const auto& a : agents)
        if (uf.find(a.id) == a.id && uf.component_size(a.id) >= 2) ++flocks;
    return flocks;
}

int lone_count(std::span<const AgentState> agents, double r, const WorldSpec& world) {
    if (agents.empty()) return 0;
    SpatialIndex index(world, r);
    index.build(agents);
    std::vector<int> buf;
    int lone = 0;
    for (const auto& a : agents) {
        index.query(a.position, r, a.id, buf);
        if (buf.empty()) ++lone;
    }
    return lone;
}

std::pair<int, double> max_aligned_group(std::span<const double> headings, double eps_align) {
    if (headings.empty()) throw std::invalid_argument("max_aligned_group needs headings");
    const int n = static_cast<int>(headings.size());
    std::vector<double> sorted(headings.begin(), headings.end());
    for (double& h : sorted) h = wrap_angle(h);
    std::sort(sorted.begin(), sorted.end());

    // Best closed window [h_i, h_i + eps]: two pointers over the unrolled circle.
    int best_count = 1, best_start = 0;
    int j = 0;
    for (int i = 0; i < n; ++i) {
        if (j < i) j = i;
        while (j + 1 < i + n) {
            const double next = sorted[(j + 1) % n] + ((j + 1) >= n ? kTwoPi : 0.0);
            if (next - sorted[i] <= eps_align) ++j;
            else break;
        }
        const int count = j - i + 1;
        if (count > best_count) {
            best_count = count;
            best_start = i;
        }
    }

    // Midpoint of the members' span: every member is within half the span
    // (<= eps/2) of it, so the direction achieves the returned count.
    const int last = best_start + best_count - 1;
    const double first_h = sorted[best_start];
    const double last_h = sorted[last % n] + (last >= n ? kTwoPi : 0.0);
    return {best_count, wrap_angle(first_h + (last_h - first_h) / 2.0)};
}

int controlled_count(std::span<const AgentState> agents, double r, double eps_align,
                     const WorldSpec& world) {
    if (agents.empty()) return 0;
    auto by_id = id_table(agents);
    int controlled = 0;
    for (const auto& component : proximity_components(agents, r, world)) {
        std::vector<double> inf_headings;
        int lowest_inf = -1;
        for (int id : component) {
            if (by_id[id]->is_influencer()) {
                if (lowest_inf < 0) lowest_inf = id;
                inf_headings.push_back(by_id[id]->heading);
            }
        }
        if (inf_headings.empty()) continue;
        const double reference =
            circular_mean(inf_headings).value_or(by_id[lowest_inf]->heading);
        for (int id : component) {
            if (by_id[id]->is_influencer()) continue;
            if (std::abs(angle_diff(by_id[id]->heading, reference)) <= eps_align) ++controlled;
        }
    }
    return controlled;
}

int offworld_count(std::span<const AgentState> agents, const WorldSpec& world) {
    int count = 0;
    for (const auto& a : agents) {
        if (a.position.x < 0.0 || a.position.x >= world.width || a.position.y < 0.0 ||
            a.position.y >= world.height)
            ++count;
    }
    return count;
}

MetricSample sample_metrics(const SimState& state, const MetricsParams& params) {
    const double r = state.world.neighborhood_radius;
    MetricSample s;
    s.step = state.step;
    s.flock_count = flock_count(state.agents, r, params.epsilon_align, state.world,
                                params.proximity_only_flocks);
    s.lone_count = lone_count(state.agents, r, state.world);
    s.lone_fraction =
        state.agents.empty() ? 0.0 : static_cast<double>(s.lone_count) / state.agents.size();
    std::vector<double> rv_headings;
    for (const auto& a : state.agents)
        if (!a.is_influencer()) rv_headings.push_back(a.heading);
    std::sort(rv_headings.begin(), rv_headings.end());  // storage-order independence
    s.max_aligned_count =
        rv_headings.empty() ? 0 : max_aligned_group(rv_headings, params.epsilon_align).first;
    s.controlled_count = controlled_count(state.agents, r, params.epsilon_align, state.world);
    s.offworld_count = offworld_count(state.agents, state.world);
    return s;
}

ConvergenceResult convergence_step(std::span<const MetricSample> samples, int rv_count,
                                   long long cap) {
    const int needed = (rv_count + 1) / 2;
    for (const auto& s : samples)
        if (s.max_aligned_count >= needed) return {s.step, false};
    return {cap, true};
}

}  // namespace flock
