// Command-line front end: runs one cell or a sweep of the flocking experiments
// and emits timeseries.csv / convergence.csv / summary.csv.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flock/config.hpp"
#include "flock/experiment.hpp"

namespace {

using flock::ConfigError;
using flock::ConfigErrorCode;
using nlohmann::json;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string flag_spelling(std::string key) {
    for (char& c : key)
        if (c == '_') c = '-';
    return "--" + key;
}

json parse_int(const std::string& flag, const std::string& value) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &pos);
    } catch (const std::exception&) {
        pos = value.size() + 1;
    }
    if (pos != value.size())
        throw ConfigError(ConfigErrorCode::MalformedNumber,
                          flag_spelling(flag) + ": '" + value + "' is not an integer");
    return json(v);
}

json parse_double(const std::string& flag, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        pos = value.size() + 1;
    }
    if (pos != value.size())
        throw ConfigError(ConfigErrorCode::MalformedNumber,
                          flag_spelling(flag) + ": '" + value + "' is not a number");
    return json(v);
}

struct CommonFlags {
    std::optional<std::string> config_file;
    std::optional<std::string> setting, placement, behavior;
    std::optional<std::string> rv_count, inf_count, placement_radius;
    std::optional<std::string> goal_theta, threshold_frac, final_radius, polygon_sides,
        candidates, circle_radius, steps, sample_interval, trials, seed, epsilon_align, threads;
    bool early_exit = false;
    bool proximity_only = false;
    std::string out_dir = "out";

    void attach(CLI::App* app) {
        app->add_option("--config", config_file, "JSON config file; flags override its values");
        app->add_option("--setting", setting, "small | large | herd");
        app->add_option("--rv-count", rv_count, "Reynolds-Vicsek agent count");
        app->add_option("--inf-count", inf_count, "influencing agent count");
        app->add_option("--placement", placement,
                        "random | grid | kmeans | circle-random | circle-grid | circle-border");
        app->add_option("--placement-radius", placement_radius,
                        "radius of the circular placements");
        app->add_option("--behavior", behavior,
                        "face | offset-momentum | lookahead | coordinated | multistep:<stage> | "
                        "circle | polygon | multicircle");
        app->add_option("--goal-theta", goal_theta, "goal direction (radians)");
        app->add_option("--threshold-frac", threshold_frac,
                        "multistep threshold as a fraction of the RV count");
        app->add_option("--final-radius", final_radius, "multicircle final orbit radius");
        app->add_option("--polygon-sides", polygon_sides, "polygon vertex count");
        app->add_option("--candidates", candidates, "lookahead/coordinated candidate count");
        app->add_option("--circle-radius", circle_radius,
                        "fixed orbit radius (0 = per-agent placement radius)");
        app->add_option("--steps", steps, "simulation horizon");
        app->add_option("--sample-interval", sample_interval, "steps between metric samples");
        app->add_option("--trials", trials, "trials per cell");
        app->add_option("--seed", seed, "base seed");
        app->add_option("--epsilon-align", epsilon_align, "alignment tolerance (radians)");
        app->add_option("--threads", threads, "parallel trial workers");
        app->add_flag("--early-exit", early_exit, "stop a trial once 50% convergence is sampled");
        app->add_flag("--proximity-only-flocks", proximity_only,
                      "flock edges ignore headings");
        app->add_option("--out", out_dir, "output directory")->capture_default_str();
    }

    /// Folds the config file and the flag overrides into one JSON document so
    /// that CLI and file configuration share parsing and validation.
    json to_json(bool allow_axes) const {
        json root = json::object();
        if (config_file) {
            std::ifstream in(*config_file);
            if (!in) throw ConfigError(ConfigErrorCode::MalformedConfig,
                                       "cannot open config file '" + *config_file + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            root = json::parse(ss.str(), nullptr, false);
            if (root.is_discarded())
                throw ConfigError(ConfigErrorCode::MalformedConfig,
                                  "config file is not valid JSON");
        }

        auto set_scalar = [&](const char* key, const std::optional<std::string>& v, bool is_int,
                              bool is_string = false) {
            if (!v) return;
            if (is_string) root[key] = *v;
            else root[key] = is_int ? parse_int(key, *v) : parse_double(key, *v);
        };
        auto set_axis = [&](const char* key, const std::optional<std::string>& v, bool is_int,
                            bool is_string = false) {
            if (!v) return;
            const auto items = split_list(*v);
            if (items.size() <= 1 && v->find(',') == std::string::npos) {
                set_scalar(key, v, is_int, is_string);
                return;
            }
            if (!allow_axes)
                throw ConfigError(ConfigErrorCode::InvalidValue,
                                  std::string("'run' expects a single value for --") + key +
                                      "; use 'sweep' for lists");
            json axis = json::array();
            for (const auto& item : items)
                axis.push_back(is_string ? json(item) : (is_int ? parse_int(key, item)
                                                                : parse_double(key, item)));
            if (!root.contains("sweep")) root["sweep"] = json::object();
            root["sweep"][key] = axis;
            root.erase(key);
        };

        set_scalar("setting", setting, false, true);
        set_axis("rv_count", rv_count, true);
        set_axis("inf_count", inf_count, true);
        set_axis("placement", placement, false, true);
        set_axis("placement_radius", placement_radius, false);
        set_axis("behavior", behavior, false, true);
        set_scalar("goal_theta", goal_theta, false);
        set_scalar("threshold_frac", threshold_frac, false);
        set_scalar("final_radius", final_radius, false);
        set_scalar("polygon_sides", polygon_sides, true);
        set_scalar("candidates", candidates, true);
        set_scalar("circle_radius", circle_radius, false);
        set_scalar("steps", steps, true);
        set_scalar("sample_interval", sample_interval, true);
        set_scalar("trials", trials, true);
        set_scalar("seed", seed, true);
        set_scalar("epsilon_align", epsilon_align, false);
        set_scalar("threads", threads, true);
        if (early_exit) root["early_exit"] = true;
        if (proximity_only) root["proximity_only_flocks"] = true;
        return root;
    }
};

int write_outputs(const flock::SweepResults& results, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    {
        std::ofstream os(fs::path(out_dir) / "timeseries.csv");
        flock::write_timeseries_csv(os, results);
    }
    {
        std::ofstream os(fs::path(out_dir) / "convergence.csv");
        flock::write_convergence_csv(os, results);
    }
    {
        std::ofstream os(fs::path(out_dir) / "summary.csv");
        flock::write_summary_csv(os, flock::summarize(results));
    }
    std::cout << "wrote " << out_dir << "/timeseries.csv, convergence.csv, summary.csv\n";
    return 0;
}

int run_command(const CommonFlags& flags, bool allow_axes) {
    const json doc = flags.to_json(allow_axes);
    flock::ExperimentConfig config = flock::parse_config(doc.dump());
    if (!allow_axes && !config.sweep.empty())
        throw ConfigError(ConfigErrorCode::InvalidValue,
                          "'run' executes a single cell; use 'sweep' for grids");
    const auto results = flock::run_sweep(config);
    std::size_t total = 0;
    for (const auto& t : results.trials) total += t.size();
    std::cout << results.cells.size() << " cell(s), " << total << " trial(s)\n";
    return write_outputs(results, flags.out_dir);
}

int summarize_command(const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::ifstream ts(fs::path(out_dir) / "timeseries.csv");
    std::ifstream cv(fs::path(out_dir) / "convergence.csv");
    if (!ts || !cv) {
        std::cerr << "error: expected " << out_dir << "/timeseries.csv and convergence.csv\n";
        return 1;
    }
    const auto rows = flock::summarize_csv_files(ts, cv);
    std::ofstream os(fs::path(out_dir) / "summary.csv");
    flock::write_summary_csv(os, rows);
    std::cout << "wrote " << out_dir << "/summary.csv (" << rows.size() << " rows)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reynolds-Vicsek flocking simulator with influencing agents"};
    app.require_subcommand(1);

    CommonFlags run_flags, sweep_flags;
    std::string summarize_dir = "out";

    CLI::App* run = app.add_subcommand("run", "run one experiment cell");
    run_flags.attach(run);
    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter grid");
    sweep_flags.attach(sweep);
    CLI::App* summarize = app.add_subcommand("summarize", "aggregate existing results");
    summarize->add_option("--out", summarize_dir, "directory holding timeseries.csv/convergence.csv")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(run_flags, false);
        if (sweep->parsed()) return run_command(sweep_flags, true);
        return summarize_command(summarize_dir);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
