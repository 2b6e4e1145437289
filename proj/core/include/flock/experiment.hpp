#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "flock/config.hpp"
#include "flock/metrics.hpp"
#include "flock/sim.hpp"

namespace flock {

/// One point of the sweep grid, fully resolved.
struct Cell {
    int index = 0;
    int rv_count = 300;
    int inf_count = 0;
    PlacementStrategy placement = PlacementStrategy::Random;
    double placement_radius = 500.0;
    BehaviorSpec behavior;
    std::string label;
};

struct TrialResult {
    int cell_index = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    std::vector<MetricSample> samples;
    ConvergenceResult convergence;
};

struct SweepResults {
    ExperimentConfig config;
    std::vector<Cell> cells;
    std::vector<std::vector<TrialResult>> trials;  // [cell][trial]
};

struct SummaryRow {
    std::string cell;
    std::string metric;
    long long step = -1;  // -1 for per-trial endpoints (convergence etc.)
    double mean = 0.0;
    double sem = 0.0;
    bool has_value = true;   // false e.g. for convergence with every trial censored
    bool single_trial = false;
};

std::string cell_label(const ExperimentConfig& config, const Cell& cell);

/// Expands the sweep axes into the Cartesian grid (rv x inf x placement x
/// radius x behavior, nested in that order). The radius axis applies only to
/// circular placements; others collapse it so no duplicate cells appear.
std::vector<Cell> expand_cells(const ExperimentConfig& config);

/// Seed for (cell, trial), mixed statelessly from the base seed.
std::uint64_t trial_seed(const ExperimentConfig& config, int cell_index, int trial);

/// Runs one fully deterministic trial: placement, stepping, sampling every
/// sample_interval steps (including step 0), convergence detection.
TrialResult run_trial(const ExperimentConfig& config, const Cell& cell, int trial);

/// Runs the whole grid, `config.threads`-wide over (cell, trial) tasks.
/// Output is identical for any thread count.
SweepResults run_sweep(const ExperimentConfig& config);

/// Per-cell, per-step mean and standard error for every metric, plus the
/// convergence endpoint (censored trials counted separately).
std::vector<SummaryRow> summarize(const SweepResults& results);

void write_timeseries_csv(std::ostream& os, const SweepResults& results);
void write_convergence_csv(std::ostream& os, const SweepResults& results);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);

/// Streaming re-aggregation of previously written timeseries/convergence CSVs.
std::vector<SummaryRow> summarize_csv_files(std::istream& timeseries, std::istream& convergence);

}  // namespace flock
