#pragma once

#include <cstdint>

namespace flock {

/// splitmix64 finalizer. Stateless, identical on every platform.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) { return mix64(a ^ mix64(b)); }

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix64(mix64(a, b), c);
}

/// Deterministic pseudo-random stream (splitmix64). Cheap to fork per purpose so
/// that, e.g., placement draws never perturb the initial-heading draws.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [0, hi).
    double uniform(double hi) { return next_double() * hi; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

    Rng fork(std::uint64_t stream) const { return Rng(mix64(state_, stream)); }

  private:
    std::uint64_t state_;
};

}  // namespace flock
