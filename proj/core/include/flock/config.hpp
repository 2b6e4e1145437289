#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "flock/behavior_spec.hpp"
#include "flock/placement.hpp"
#include "flock/world.hpp"

namespace flock {

enum class ConfigErrorCode {
    MalformedConfig,
    UnknownKey,
    UnknownSetting,
    UnknownPlacement,
    UnknownBehavior,
    SettingMismatch,
    MalformedNumber,
    InvalidValue,
};

class ConfigError : public std::runtime_error {
  public:
    ConfigError(ConfigErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ConfigErrorCode code() const { return code_; }

  private:
    ConfigErrorCode code_;
};

/// Sweep axes; an empty axis means "use the single configured value".
struct SweepAxes {
    std::vector<int> rv_counts;
    std::vector<int> inf_counts;
    std::vector<PlacementStrategy> placements;
    std::vector<double> placement_radii;  // applies to circular placements only
    std::vector<BehaviorSpec> behaviors;

    bool empty() const {
        return rv_counts.empty() && inf_counts.empty() && placements.empty() &&
               placement_radii.empty() && behaviors.empty();
    }
};

struct ExperimentConfig {
    Setting setting = Setting::Large;
    int rv_count = 300;
    int inf_count = 0;
    PlacementStrategy placement = PlacementStrategy::Random;
    double placement_radius = 500.0;
    BehaviorSpec behavior;
    long long max_steps = 6000;
    int sample_interval = 100;
    int trials = 100;
    std::uint64_t base_seed = 0;
    double epsilon_align = 0.1;
    int threads = 1;
    bool early_exit = false;            // stop a trial once 50% convergence is sampled
    bool proximity_only_flocks = false;
    SweepAxes sweep;
};

std::string setting_name(Setting s);

/// Parses the JSON experiment file. Unknown keys are rejected; defaults fill
/// unset fields; the result is validated (see validate_config).
ExperimentConfig parse_config(const std::string& text);

/// Cross-field validation: placement/behavior vs. setting, ranges, and the
/// sampling grid. Throws ConfigError.
void validate_config(const ExperimentConfig& config);

}  // namespace flock
