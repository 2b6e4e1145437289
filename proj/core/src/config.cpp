#include "flock/config.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "json.hpp"

namespace flock {

namespace {

using nlohmann::json;

[[noreturn]] void fail(ConfigErrorCode code, const std::string& msg) {
    throw ConfigError(code, msg);
}

double require_number(const json& j, const std::string& key) {
    if (!j.is_number()) fail(ConfigErrorCode::MalformedNumber, "'" + key + "' must be a number");
    return j.get<double>();
}

long long require_integer(const json& j, const std::string& key) {
    if (!j.is_number_integer())
        fail(ConfigErrorCode::MalformedNumber, "'" + key + "' must be an integer");
    return j.get<long long>();
}

bool require_bool(const json& j, const std::string& key) {
    if (!j.is_boolean()) fail(ConfigErrorCode::MalformedNumber, "'" + key + "' must be a boolean");
    return j.get<bool>();
}

std::string require_string(const json& j, const std::string& key) {
    if (!j.is_string()) fail(ConfigErrorCode::MalformedConfig, "'" + key + "' must be a string");
    return j.get<std::string>();
}

Setting parse_setting(const std::string& name) {
    if (name == "small") return Setting::Small;
    if (name == "large") return Setting::Large;
    if (name == "herd") return Setting::Herd;
    fail(ConfigErrorCode::UnknownSetting, "unknown setting '" + name + "'");
}

PlacementStrategy parse_placement(const std::string& name) {
    if (auto p = placement_from_name(name)) return *p;
    fail(ConfigErrorCode::UnknownPlacement, "unknown placement '" + name + "'");
}

BehaviorSpec parse_behavior(const std::string& name) {
    if (auto b = behavior_from_name(name)) return *b;
    fail(ConfigErrorCode::UnknownBehavior, "unknown behavior '" + name + "'");
}

// Behavior parameters (goal, candidate counts, ...) are shared across a sweep's
// behavior axis; merge them into each axis entry.
BehaviorSpec merge_params(BehaviorSpec axis_entry, const BehaviorSpec& base) {
    axis_entry.goal_theta = base.goal_theta;
    axis_entry.threshold_frac = base.threshold_frac;
    axis_entry.candidates = base.candidates;
    axis_entry.circle_radius = base.circle_radius;
    axis_entry.polygon_sides = base.polygon_sides;
    axis_entry.final_radius = base.final_radius;
    axis_entry.include_influencer_headings = base.include_influencer_headings;
    return axis_entry;
}

}  // namespace

std::string setting_name(Setting s) {
    switch (s) {
        case Setting::Small: return "small";
        case Setting::Large: return "large";
        default: return "herd";
    }
}

ExperimentConfig parse_config(const std::string& text) {
    json root = json::parse(text, nullptr, false);
    if (root.is_discarded() || !root.is_object())
        fail(ConfigErrorCode::MalformedConfig, "config must be a JSON object");

    static const std::set<std::string> known = {
        "setting",        "rv_count",       "inf_count",      "placement",
        "placement_radius", "behavior",     "goal_theta",     "threshold_frac",
        "final_radius",   "polygon_sides",  "candidates",     "circle_radius",
        "include_influencer_headings",      "steps",          "sample_interval",
        "trials",         "seed",           "epsilon_align",  "threads",
        "early_exit",     "proximity_only_flocks",            "sweep"};
    static const std::set<std::string> known_axes = {"rv_count", "inf_count", "placement",
                                                     "placement_radius", "behavior"};

    for (const auto& [key, value] : root.items()) {
        (void)value;
        if (!known.count(key)) fail(ConfigErrorCode::UnknownKey, "unknown key '" + key + "'");
    }

    ExperimentConfig cfg;
    bool placement_given = false;

    if (root.contains("setting")) cfg.setting = parse_setting(require_string(root["setting"], "setting"));
    if (root.contains("rv_count"))
        cfg.rv_count = static_cast<int>(require_integer(root["rv_count"], "rv_count"));
    if (root.contains("inf_count"))
        cfg.inf_count = static_cast<int>(require_integer(root["inf_count"], "inf_count"));
    if (root.contains("placement")) {
        cfg.placement = parse_placement(require_string(root["placement"], "placement"));
        placement_given = true;
    }
    if (root.contains("placement_radius"))
        cfg.placement_radius = require_number(root["placement_radius"], "placement_radius");
    if (root.contains("behavior"))
        cfg.behavior = parse_behavior(require_string(root["behavior"], "behavior"));
    if (root.contains("goal_theta"))
        cfg.behavior.goal_theta = require_number(root["goal_theta"], "goal_theta");
    if (root.contains("threshold_frac"))
        cfg.behavior.threshold_frac = require_number(root["threshold_frac"], "threshold_frac");
    if (root.contains("final_radius"))
        cfg.behavior.final_radius = require_number(root["final_radius"], "final_radius");
    if (root.contains("polygon_sides"))
        cfg.behavior.polygon_sides =
            static_cast<int>(require_integer(root["polygon_sides"], "polygon_sides"));
    if (root.contains("candidates"))
        cfg.behavior.candidates = static_cast<int>(require_integer(root["candidates"], "candidates"));
    if (root.contains("circle_radius"))
        cfg.behavior.circle_radius = require_number(root["circle_radius"], "circle_radius");
    if (root.contains("include_influencer_headings"))
        cfg.behavior.include_influencer_headings =
            require_bool(root["include_influencer_headings"], "include_influencer_headings");
    if (root.contains("steps")) cfg.max_steps = require_integer(root["steps"], "steps");
    if (root.contains("sample_interval"))
        cfg.sample_interval = static_cast<int>(require_integer(root["sample_interval"], "sample_interval"));
    if (root.contains("trials")) cfg.trials = static_cast<int>(require_integer(root["trials"], "trials"));
    if (root.contains("seed"))
        cfg.base_seed = static_cast<std::uint64_t>(require_integer(root["seed"], "seed"));
    if (root.contains("epsilon_align"))
        cfg.epsilon_align = require_number(root["epsilon_align"], "epsilon_align");
    if (root.contains("threads")) cfg.threads = static_cast<int>(require_integer(root["threads"], "threads"));
    if (root.contains("early_exit")) cfg.early_exit = require_bool(root["early_exit"], "early_exit");
    if (root.contains("proximity_only_flocks"))
        cfg.proximity_only_flocks = require_bool(root["proximity_only_flocks"], "proximity_only_flocks");

    if (!placement_given && cfg.setting == Setting::Herd)
        cfg.placement = PlacementStrategy::CircleRandom;

    if (root.contains("sweep")) {
        const json& sweep = root["sweep"];
        if (!sweep.is_object()) fail(ConfigErrorCode::MalformedConfig, "'sweep' must be an object");
        for (const auto& [key, value] : sweep.items()) {
            if (!known_axes.count(key))
                fail(ConfigErrorCode::UnknownKey, "unknown sweep axis '" + key + "'");
            if (!value.is_array())
                fail(ConfigErrorCode::MalformedConfig, "sweep axis '" + key + "' must be an array");
            for (const json& item : value) {
                if (key == "rv_count")
                    cfg.sweep.rv_counts.push_back(static_cast<int>(require_integer(item, key)));
                else if (key == "inf_count")
                    cfg.sweep.inf_counts.push_back(static_cast<int>(require_integer(item, key)));
                else if (key == "placement")
                    cfg.sweep.placements.push_back(parse_placement(require_string(item, key)));
                else if (key == "placement_radius")
                    cfg.sweep.placement_radii.push_back(require_number(item, key));
                else
                    cfg.sweep.behaviors.push_back(
                        merge_params(parse_behavior(require_string(item, key)), cfg.behavior));
            }
        }
    }

    validate_config(cfg);
    return cfg;
}

void validate_config(const ExperimentConfig& cfg) {
    auto check_placement = [&](PlacementStrategy p) {
        const bool circular = placement_is_circular(p);
        if (cfg.setting == Setting::Herd && !circular && p != PlacementStrategy::KMeans)
            fail(ConfigErrorCode::SettingMismatch,
                 "placement '" + placement_name(p) + "' is not valid in the herd setting");
        if (cfg.setting != Setting::Herd && circular)
            fail(ConfigErrorCode::SettingMismatch,
                 "placement '" + placement_name(p) + "' requires the herd setting");
    };
    auto check_behavior = [&](const BehaviorSpec& b) {
        const bool stationary = b.kind == BehaviorKind::Circle ||
                                b.kind == BehaviorKind::Polygon ||
                                b.kind == BehaviorKind::Multicircle;
        if (cfg.setting == Setting::Herd && b.kind == BehaviorKind::Multistep)
            fail(ConfigErrorCode::SettingMismatch,
                 "multistep requires a toroidal setting; in an open world the threshold may "
                 "never be reached");
        if (cfg.setting != Setting::Herd && stationary)
            fail(ConfigErrorCode::SettingMismatch,
                 "behavior '" + behavior_name(b) + "' requires the herd setting");
        if (b.candidates != 0 && b.candidates < 2)
            fail(ConfigErrorCode::InvalidValue, "candidates must be >= 2");
        if (b.polygon_sides < 3) fail(ConfigErrorCode::InvalidValue, "polygon_sides must be >= 3");
        if (b.threshold_frac <= 0.0)
            fail(ConfigErrorCode::InvalidValue, "threshold_frac must be > 0");
        if (b.kind == BehaviorKind::Multicircle) {
            if (b.final_radius <= 0.0)
                fail(ConfigErrorCode::InvalidValue, "final_radius must be > 0");
            bool any_circular = placement_is_circular(cfg.placement);
            for (PlacementStrategy p : cfg.sweep.placements)
                any_circular = any_circular || placement_is_circular(p);
            if (any_circular) {
                std::vector<double> radii = cfg.sweep.placement_radii;
                if (radii.empty()) radii.push_back(cfg.placement_radius);
                for (double rad : radii)
                    if (b.final_radius <= rad)
                        fail(ConfigErrorCode::InvalidValue,
                             "multicircle final_radius must exceed the placement radius");
            }
        }
        if (b.circle_radius < 0.0)
            fail(ConfigErrorCode::InvalidValue, "circle_radius must be >= 0");
    };

    if (cfg.rv_count < 1) fail(ConfigErrorCode::InvalidValue, "rv_count must be >= 1");
    for (int n : cfg.sweep.rv_counts)
        if (n < 1) fail(ConfigErrorCode::InvalidValue, "rv_count must be >= 1");
    if (cfg.inf_count < 0) fail(ConfigErrorCode::InvalidValue, "inf_count must be >= 0");
    for (int n : cfg.sweep.inf_counts)
        if (n < 0) fail(ConfigErrorCode::InvalidValue, "inf_count must be >= 0");
    if (cfg.trials < 1) fail(ConfigErrorCode::InvalidValue, "trials must be >= 1");
    if (cfg.sample_interval < 1)
        fail(ConfigErrorCode::InvalidValue, "sample_interval must be >= 1");
    if (cfg.max_steps < 0 || cfg.max_steps % cfg.sample_interval != 0)
        fail(ConfigErrorCode::InvalidValue, "steps must be a multiple of sample_interval");
    if (!(cfg.epsilon_align > 0.0 && cfg.epsilon_align < std::numbers::pi))
        fail(ConfigErrorCode::InvalidValue, "epsilon_align must be in (0, pi)");
    if (cfg.threads < 1) fail(ConfigErrorCode::InvalidValue, "threads must be >= 1");
    if (cfg.placement_radius <= 0.0)
        fail(ConfigErrorCode::InvalidValue, "placement_radius must be > 0");
    for (double r : cfg.sweep.placement_radii)
        if (r <= 0.0) fail(ConfigErrorCode::InvalidValue, "placement_radius must be > 0");

    check_placement(cfg.placement);
    for (PlacementStrategy p : cfg.sweep.placements) check_placement(p);
    check_behavior(cfg.behavior);
    for (const BehaviorSpec& b : cfg.sweep.behaviors) check_behavior(b);
}

}  // namespace flock
