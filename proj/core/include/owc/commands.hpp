#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "owc/exact.hpp"
#include "owc/qlearning.hpp"
#include "owc/scenario.hpp"

namespace owc {

enum class SteeringSelection { off, on, both };

struct CliOptions {
    std::filesystem::path out_dir = ".";
    SteeringSelection steering = SteeringSelection::both;
    std::optional<std::uint64_t> seed;  // overrides config.ql.rng_seed
    double heatmap_step_m = 0.1;
};

/// Steering settings selected by `sel`, in deterministic off-then-on order.
std::vector<bool> steering_variants(SteeringSelection sel);

struct SolveRun {
    bool steering = false;
    OptimalSolution solution;
};

struct SolveResult {
    std::vector<SolveRun> runs;
    std::filesystem::path csv_path;  // exact_<name>.csv
};

/// Exact optimizer over the selected steering settings; emits per-user rows
/// plus a summary row per setting.
SolveResult cmd_solve(const ScenarioConfig& config, const CliOptions& opts);

struct TrainRun {
    bool steering = false;
    TrainReport report;
    Assignment greedy;
    SinrReport greedy_report;
    double exact_objective_linear = 0.0;
    bool matches_exact = false;   // greedy objective within 1e-9 relative
    bool greedy_feasible = false;  // greedy meets the per-user SINR floor
    std::filesystem::path greedy_csv;
    std::filesystem::path report_csv;
    std::filesystem::path trace_csv;
};

struct TrainResultSet {
    std::vector<TrainRun> runs;
};

/// Q-learning per steering setting: writes the greedy assignment's report,
/// the training summary, and the convergence trace.
TrainResultSet cmd_train(const ScenarioConfig& config, const CliOptions& opts);

struct CompareResult {
    std::filesystem::path csv_path;  // compare_<name>.csv
    std::string csv_text;
};

/// Exact vs. Q-learning on the selected steering settings: one row per
/// (method, steering, user) plus sum-SINR rows.
CompareResult cmd_compare(const ScenarioConfig& config, const CliOptions& opts);

struct HeatmapCell {
    double x = 0.0;
    double y = 0.0;
    int best_ap = 0;  // flat 1-based AP index: (array_id - 1) * N + ap_id
    double sinr_db = 0.0;
};

struct HeatmapResult {
    std::vector<HeatmapCell> cells;
    std::filesystem::path csv_path;  // heatmap_<name>.csv
};

/// Sweeps a lone probe receiver over the receiving plane on a square grid
/// and records the best AP and its SINR at each point. Uses the single
/// steering setting in opts (both is rejected).
HeatmapResult cmd_heatmap(const ScenarioConfig& config, const CliOptions& opts);

}  // namespace owc
