#include "flock/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "flock/angles.hpp"
#include "flock/placement.hpp"
#include "flock/rng.hpp"

namespace flock {

namespace {

// Shortest round-trip representation: re-aggregating the CSV reproduces the
// in-memory doubles (and therefore the in-memory summary) exactly.
std::string fmt_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

/// Numerically stable running mean/variance, accumulated in trial order so the
/// in-memory and from-file summaries agree byte for byte.
struct Welford {
    long long n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }
    double sem() const {
        if (n < 2) return 0.0;
        return std::sqrt(m2 / (n - 1)) / std::sqrt(static_cast<double>(n));
    }
};

const char* const kMetricNames[] = {"flock_count",       "lone_count",       "lone_fraction",
                                    "max_aligned_count", "controlled_count", "offworld_count"};

double metric_value(const MetricSample& s, int metric) {
    switch (metric) {
        case 0: return s.flock_count;
        case 1: return s.lone_count;
        case 2: return s.lone_fraction;
        case 3: return s.max_aligned_count;
        case 4: return s.controlled_count;
        default: return s.offworld_count;
    }
}

}  // namespace

std::string cell_label(const ExperimentConfig& config, const Cell& cell) {
    std::string label = setting_name(config.setting);
    label += ";rv=" + std::to_string(cell.rv_count);
    label += ";inf=" + std::to_string(cell.inf_count);
    label += ";pl=" + placement_name(cell.placement);
    if (placement_is_circular(cell.placement))
        label += "@" + fmt_double(cell.placement_radius);
    label += ";bh=" + behavior_name(cell.behavior);
    return label;
}

std::vector<Cell> expand_cells(const ExperimentConfig& config) {
    auto axis_or = [](const auto& axis, auto single) {
        using T = typename std::decay_t<decltype(axis)>::value_type;
        if (!axis.empty()) return axis;
        return std::vector<T>{single};
    };
    const auto rv_axis = axis_or(config.sweep.rv_counts, config.rv_count);
    const auto inf_axis = axis_or(config.sweep.inf_counts, config.inf_count);
    const auto placement_axis = axis_or(config.sweep.placements, config.placement);
    const auto radius_axis = axis_or(config.sweep.placement_radii, config.placement_radius);
    const auto behavior_axis = axis_or(config.sweep.behaviors, config.behavior);

    std::vector<Cell> cells;
    for (int rv : rv_axis) {
        for (int inf : inf_axis) {
            for (PlacementStrategy placement : placement_axis) {
                const auto radii = placement_is_circular(placement)
                                       ? radius_axis
                                       : std::vector<double>{config.placement_radius};
                for (double radius : radii) {
                    for (const BehaviorSpec& behavior : behavior_axis) {
                        Cell cell;
                        cell.index = static_cast<int>(cells.size());
                        cell.rv_count = rv;
                        cell.inf_count = inf;
                        cell.placement = placement;
                        cell.placement_radius = radius;
                        cell.behavior = behavior;
                        cell.label = cell_label(config, cell);
                        cells.push_back(std::move(cell));
                    }
                }
            }
        }
    }
    return cells;
}

std::uint64_t trial_seed(const ExperimentConfig& config, int cell_index, int trial) {
    return mix64(config.base_seed, static_cast<std::uint64_t>(cell_index),
                 static_cast<std::uint64_t>(trial));
}

TrialResult run_trial(const ExperimentConfig& config, const Cell& cell, int trial) {
    const std::uint64_t seed = trial_seed(config, cell.index, trial);
    Rng rv_rng(mix64(seed, 1));
    Rng heading_rng(mix64(seed, 2));
    Rng placement_rng(mix64(seed, 3));

    const WorldSpec world = WorldSpec::for_setting(config.setting);
    std::vector<AgentState> agents = init_rv_agents(config.setting, cell.rv_count, rv_rng);

    if (cell.inf_count > 0) {
        std::vector<Vec2> rv_positions;
        rv_positions.reserve(agents.size());
        for (const auto& a : agents) rv_positions.push_back(a.position);

        PlacementSpec pspec;
        pspec.strategy = cell.placement;
        pspec.origin = world.center();
        pspec.radius = cell.placement_radius;
        pspec.count = cell.inf_count;
        const auto positions = place_influencers(pspec, world, rv_positions, placement_rng);

        for (int i = 0; i < cell.inf_count; ++i) {
            AgentState a;
            a.id = cell.rv_count + i;
            a.kind = AgentKind::Influencer;
            a.position = positions[i];
            a.heading = heading_rng.uniform(kTwoPi);
            agents.push_back(a);
        }
    }

    Simulation sim(SimState{0, std::move(agents), world, seed}, cell.behavior);
    const MetricsParams mp{config.epsilon_align, config.proximity_only_flocks};
    const int convergence_target = (cell.rv_count + 1) / 2;

    TrialResult result;
    result.cell_index = cell.index;
    result.trial = trial;
    result.seed = seed;
    result.samples.push_back(sample_metrics(sim.state(), mp));

    bool done = config.early_exit && result.samples.back().max_aligned_count >= convergence_target;
    for (long long t = 1; t <= config.max_steps && !done; ++t) {
        sim.step();
        if (t % config.sample_interval == 0) {
            result.samples.push_back(sample_metrics(sim.state(), mp));
            done = config.early_exit &&
                   result.samples.back().max_aligned_count >= convergence_target;
        }
    }
    result.convergence = convergence_step(result.samples, cell.rv_count, config.max_steps);
    return result;
}

SweepResults run_sweep(const ExperimentConfig& config) {
    SweepResults results;
    results.config = config;
    results.cells = expand_cells(config);
    results.trials.resize(results.cells.size());
    for (auto& t : results.trials) t.resize(config.trials);

    const std::size_t total = results.cells.size() * static_cast<std::size_t>(config.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t task = next.fetch_add(1);
            if (task >= total) break;
            const std::size_t c = task / config.trials;
            const int t = static_cast<int>(task % config.trials);
            results.trials[c][t] = run_trial(config, results.cells[c], t);
        }
    };

    const int n_threads = std::max(1, std::min<int>(config.threads, static_cast<int>(total)));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads - 1);
        for (int i = 0; i < n_threads - 1; ++i) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
    }
    return results;
}

std::vector<SummaryRow> summarize(const SweepResults& results) {
    std::vector<SummaryRow> rows;
    for (std::size_t c = 0; c < results.cells.size(); ++c) {
        const auto& trials = results.trials[c];
        const std::string& label = results.cells[c].label;

        std::size_t max_samples = 0;
        for (const auto& t : trials) max_samples = std::max(max_samples, t.samples.size());

        for (int metric = 0; metric < 6; ++metric) {
            for (std::size_t s = 0; s < max_samples; ++s) {
                Welford acc;
                long long step = -1;
                for (const auto& t : trials) {
                    if (s >= t.samples.size()) continue;  // early-exited trial
                    step = t.samples[s].step;
                    acc.add(metric_value(t.samples[s], metric));
                }
                if (acc.n == 0) continue;
                rows.push_back({label, kMetricNames[metric], step, acc.mean, acc.sem(), true,
                                acc.n == 1});
            }
        }

        Welford conv;
        long long censored = 0;
        for (const auto& t : trials) {
            if (t.convergence.censored) ++censored;
            else conv.add(static_cast<double>(t.convergence.step));
        }
        rows.push_back({label, "convergence_step", -1, conv.mean, conv.sem(), conv.n > 0,
                        conv.n == 1});
        rows.push_back({label, "censored_trials", -1, static_cast<double>(censored), 0.0, true,
                        false});
        rows.push_back({label, "trials", -1, static_cast<double>(trials.size()), 0.0, true,
                        false});
    }
    return rows;
}

void write_timeseries_csv(std::ostream& os, const SweepResults& results) {
    os << "cell,trial,seed,step,flock_count,lone_count,lone_fraction,max_aligned_count,"
          "controlled_count,offworld_count\n";
    for (std::size_t c = 0; c < results.cells.size(); ++c) {
        for (const auto& t : results.trials[c]) {
            for (const auto& s : t.samples) {
                os << results.cells[c].label << ',' << t.trial << ',' << t.seed << ',' << s.step
                   << ',' << s.flock_count << ',' << s.lone_count << ','
                   << fmt_double(s.lone_fraction) << ',' << s.max_aligned_count << ','
                   << s.controlled_count << ',' << s.offworld_count << '\n';
            }
        }
    }
}

void write_convergence_csv(std::ostream& os, const SweepResults& results) {
    os << "cell,trial,step,censored\n";
    for (std::size_t c = 0; c < results.cells.size(); ++c) {
        for (const auto& t : results.trials[c]) {
            os << results.cells[c].label << ',' << t.trial << ',' << t.convergence.step << ','
               << (t.convergence.censored ? 1 : 0) << '\n';
        }
    }
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
    os << "cell,metric,step,mean,sem\n";
    for (const auto& row : rows) {
        os << row.cell << ',' << row.metric << ',' << row.step << ',';
        if (row.has_value) os << fmt_double(row.mean) << ',' << fmt_double(row.sem);
        else os << ',';
        os << '\n';
    }
}

std::vector<SummaryRow> summarize_csv_files(std::istream& timeseries, std::istream& convergence) {
    // Accumulators keyed by (cell, metric, step); key order = first appearance,
    // matching the write order of the in-memory summary.
    struct Key {
        std::string cell;
        int metric;
        long long step;
        bool operator<(const Key& o) const {
            if (cell != o.cell) return cell < o.cell;
            if (metric != o.metric) return metric < o.metric;
            return step < o.step;
        }
    };
    std::map<Key, Welford> acc;
    std::vector<std::string> cell_order;

    auto split = [](const std::string& line) {
        std::vector<std::string> out;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) out.push_back(field);
        if (!line.empty() && line.back() == ',') out.push_back("");
        return out;
    };

    std::string line;
    std::getline(timeseries, line);  // header
    while (std::getline(timeseries, line)) {
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != 10) continue;
        if (std::find(cell_order.begin(), cell_order.end(), fields[0]) == cell_order.end())
            cell_order.push_back(fields[0]);
        const long long step = std::stoll(fields[3]);
        for (int metric = 0; metric < 6; ++metric)
            acc[{fields[0], metric, step}].add(std::stod(fields[4 + metric]));
    }

    struct ConvAcc {
        Welford uncensored;
        long long censored = 0;
        long long trials = 0;
    };
    std::map<std::string, ConvAcc> conv;
    std::getline(convergence, line);  // header
    while (std::getline(convergence, line)) {
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != 4) continue;
        auto& ca = conv[fields[0]];
        ++ca.trials;
        if (fields[3] == "1") ++ca.censored;
        else ca.uncensored.add(std::stod(fields[2]));
    }

    std::vector<SummaryRow> rows;
    for (const std::string& cell : cell_order) {
        for (int metric = 0; metric < 6; ++metric) {
            for (const auto& [key, w] : acc) {
                if (key.cell != cell || key.metric != metric) continue;
                rows.push_back({cell, kMetricNames[metric], key.step, w.mean, w.sem(), true,
                                w.n == 1});
            }
        }
        const auto it = conv.find(cell);
        if (it != conv.end()) {
            const auto& ca = it->second;
            rows.push_back({cell, "convergence_step", -1, ca.uncensored.mean,
                            ca.uncensored.sem(), ca.uncensored.n > 0, ca.uncensored.n == 1});
            rows.push_back({cell, "censored_trials", -1, static_cast<double>(ca.censored), 0.0,
                            true, false});
            rows.push_back({cell, "trials", -1, static_cast<double>(ca.trials), 0.0, true,
                            false});
        }
    }
    return rows;
}

}  // namespace flock
