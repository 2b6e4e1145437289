#include "flock/spatial_index.hpp"

#include <algorithm>
#include <cmath>

namespace flock {

SpatialIndex::SpatialIndex(const WorldSpec& world, double cell_size, Mode mode)
    : world_(world), cell_size_(cell_size), mode_(mode),
      toroidal_(world.topology == Topology::Toroidal) {
    if (mode_ == Mode::BruteForce) return;
    if (toroidal_) {
        nx_ = std::max(1, static_cast<int>(std::floor(world.width / cell_size_)));
        ny_ = std::max(1, static_cast<int>(std::floor(world.height / cell_size_)));
        cell_w_ = world.width / nx_;
        cell_h_ = world.height / ny_;
        grid_.resize(static_cast<std::size_t>(nx_) * ny_);
    }
}

void SpatialIndex::build(std::span<const AgentState> agents) {
    std::size_t max_id = 0;
    for (const auto& a : agents) max_id = std::max(max_id, static_cast<std::size_t>(a.id));
    positions_.assign(max_id + 1, Vec2{});

    if (mode_ == Mode::BruteForce) {
        all_ids_.clear();
        for (const auto& a : agents) {
            positions_[a.id] = a.position;
            all_ids_.push_back(a.id);
        }
        return;
    }

    if (toroidal_) {
        for (auto& cell : grid_) cell.clear();
        for (const auto& a : agents) {
            positions_[a.id] = a.position;
            int cx = std::min(nx_ - 1, static_cast<int>(a.position.x / cell_w_));
            int cy = std::min(ny_ - 1, static_cast<int>(a.position.y / cell_h_));
            grid_[static_cast<std::size_t>(cy) * nx_ + cx].push_back(a.id);
        }
    } else {
        sparse_.clear();
        for (const auto& a : agents) {
            positions_[a.id] = a.position;
            auto cx = static_cast<std::int32_t>(std::floor(a.position.x / cell_size_));
            auto cy = static_cast<std::int32_t>(std::floor(a.position.y / cell_size_));
            sparse_[pack_key(cx, cy)].push_back(a.id);
        }
    }
}

void SpatialIndex::query(const Vec2& center, double radius, int exclude_id,
                         std::vector<int>& out) const {
    out.clear();
    const double r2 = radius * radius;

    auto consider = [&](int id) {
        if (id == exclude_id) return;
        const Vec2 d = torus_delta(center, positions_[id], world_);
        if (d.norm2() <= r2) out.push_back(id);
    };

    if (mode_ == Mode::BruteForce) {
        for (int id : all_ids_) consider(id);
        std::sort(out.begin(), out.end());
        return;
    }

    if (toroidal_) {
        int span_x = static_cast<int>(std::ceil(radius / cell_w_));
        int span_y = static_cast<int>(std::ceil(radius / cell_h_));
        int cx = std::min(nx_ - 1, static_cast<int>(wrap_coord(center.x, world_.width) / cell_w_));
        int cy = std::min(ny_ - 1, static_cast<int>(wrap_coord(center.y, world_.height) / cell_h_));
        // clamp so wrapped columns/rows are visited once
        int lo_x = -span_x, hi_x = span_x;
        if (2 * span_x + 1 >= nx_) { lo_x = 0; hi_x = nx_ - 1; cx = 0; }
        int lo_y = -span_y, hi_y = span_y;
        if (2 * span_y + 1 >= ny_) { lo_y = 0; hi_y = ny_ - 1; cy = 0; }
        for (int dy = lo_y; dy <= hi_y; ++dy) {
            int gy = ((cy + dy) % ny_ + ny_) % ny_;
            for (int dx = lo_x; dx <= hi_x; ++dx) {
                int gx = ((cx + dx) % nx_ + nx_) % nx_;
                for (int id : grid_[static_cast<std::size_t>(gy) * nx_ + gx]) consider(id);
            }
        }
    } else {
        int span = static_cast<int>(std::ceil(radius / cell_size_));
        auto cx = static_cast<std::int32_t>(std::floor(center.x / cell_size_));
        auto cy = static_cast<std::int32_t>(std::floor(center.y / cell_size_));
        for (std::int32_t gy = cy - span; gy <= cy + span; ++gy) {
            for (std::int32_t gx = cx - span; gx <= cx + span; ++gx) {
                auto it = sparse_.find(pack_key(gx, gy));
                if (it == sparse_.end()) continue;
                for (int id : it->second) consider(id);
            }
        }
    }
    std::sort(out.begin(), out.end());
}

}  // namespace flock
