#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "flock/agent.hpp"
#include "flock/world.hpp"

namespace flock {

/// Fixed-radius neighbor index. Toroidal worlds use a dense wrapped grid whose
/// cells are at least `cell_size` wide; open worlds use a sparse hash grid keyed
/// by cell coordinates, since positions are unbounded.
///
/// Query results are sorted by agent id, so they are independent of the storage
/// order of the agents and can be accumulated reproducibly.
class SpatialIndex {
  public:
    /// BruteForce skips the grid and scans every agent per query; it exists as
    /// the reference path for performance comparisons.
    enum class Mode { Grid, BruteForce };

    SpatialIndex() = default;
    SpatialIndex(const WorldSpec& world, double cell_size, Mode mode = Mode::Grid);

    /// Rebuilds the buckets from the given agents (cleared first).
    void build(std::span<const AgentState> agents);

    /// Ids of agents with distance(center, position) <= radius, ascending,
    /// excluding `exclude_id` (pass -1 to keep everyone).
    void query(const Vec2& center, double radius, int exclude_id, std::vector<int>& out) const;

    std::vector<int> query(const Vec2& center, double radius, int exclude_id = -1) const {
        std::vector<int> out;
        query(center, radius, exclude_id, out);
        return out;
    }

  private:
    WorldSpec world_;
    double cell_size_ = 10.0;
    Mode mode_ = Mode::Grid;
    bool toroidal_ = true;
    std::vector<int> all_ids_;  // BruteForce mode
    // dense grid (toroidal)
    int nx_ = 0, ny_ = 0;
    double cell_w_ = 0.0, cell_h_ = 0.0;
    std::vector<std::vector<int>> grid_;
    // sparse grid (open)
    std::unordered_map<std::uint64_t, std::vector<int>> sparse_;
    std::vector<Vec2> positions_;  // by agent id

    static std::uint64_t pack_key(std::int32_t cx, std::int32_t cy) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx)) << 32) |
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(cy));
    }
};

/// Convenience wrapper matching the rest of the geometry API.
inline std::vector<int> radius_query(const SpatialIndex& index, const Vec2& center, double radius,
                                     int exclude_id = -1) {
    return index.query(center, radius, exclude_id);
}

}  // namespace flock
