// owcsim: downlink resource allocation for an indoor laser-based optical
// wireless network. Subcommands: solve (exact optimizer), train (tabular
// Q-learning), compare (both methods side by side), heatmap (coverage sweep).

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "owc/commands.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string preset;
    std::string steering = "both";
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    auto* config = cmd->add_option("--config", args.config_path,
                                   "Path to a JSON scenario config");
    auto* preset = cmd->add_option("--preset", args.preset,
                                   "Built-in scenario: scenario1 or scenario2");
    config->excludes(preset);
    preset->excludes(config);
    cmd->add_option("--steering", args.steering, "Steering setting: on, off, both")
        ->check(CLI::IsMember({"on", "off", "both"}));
    cmd->add_option("--seed", args.seed, "Override the training RNG seed")
        ->each([&args](const std::string&) { args.seed_set = true; });
    cmd->add_option("--out", args.out_dir, "Output directory for CSV files");
}

owc::ScenarioConfig resolve_config(const CommonArgs& args) {
    if (!args.preset.empty()) {
        auto preset = owc::preset_by_name(args.preset);
        if (!preset) {
            throw owc::ConfigError("unknown preset: " + args.preset +
                                   " (expected scenario1 or scenario2)");
        }
        return *preset;
    }
    if (!args.config_path.empty()) {
        return owc::load_config(args.config_path);
    }
    throw owc::ConfigError("one of --config or --preset is required");
}

owc::CliOptions resolve_options(const CommonArgs& args) {
    owc::CliOptions opts;
    opts.out_dir = args.out_dir;
    if (args.steering == "on") {
        opts.steering = owc::SteeringSelection::on;
    } else if (args.steering == "off") {
        opts.steering = owc::SteeringSelection::off;
    } else {
        opts.steering = owc::SteeringSelection::both;
    }
    if (args.seed_set) opts.seed = args.seed;
    return opts;
}

void print_assignment_line(const owc::SinrReport& report) {
    for (const auto& row : report.rows) {
        std::cout << "  user " << row.user_id << " -> array "
                  << row.serving.array_id << ", ap " << row.serving.ap_id
                  << "  (" << row.sinr_db << " dB)\n";
    }
}

int run_solve(const CommonArgs& args) {
    const auto config = resolve_config(args);
    const auto result = owc::cmd_solve(config, resolve_options(args));
    for (const auto& run : result.runs) {
        const auto& s = run.solution;
        std::cout << config.name << " steering " << (run.steering ? "on" : "off")
                  << ": objective " << s.objective_linear << " (sum "
                  << s.report.sum_sinr_db << " dB), "
                  << (s.feasible_wrt_min_sinr ? "meets" : "DOES NOT meet")
                  << " the SINR floor; " << s.n_feasible << "/" << s.n_enumerated
                  << " assignments feasible, " << s.n_ties << " tied at the optimum\n";
        print_assignment_line(s.report);
    }
    std::cout << "wrote " << result.csv_path.string() << "\n";
    return 0;
}

int run_train(const CommonArgs& args) {
    const auto config = resolve_config(args);
    const auto result = owc::cmd_train(config, resolve_options(args));
    for (const auto& run : result.runs) {
        std::cout << config.name << " steering " << (run.steering ? "on" : "off")
                  << ": " << run.report.episodes_run << " episodes, greedy objective "
                  << run.report.greedy_objective_linear << " vs exact "
                  << run.exact_objective_linear << " -> "
                  << (run.matches_exact ? "MATCH" : "MISMATCH") << "\n";
        print_assignment_line(run.greedy_report);
        std::cout << "  wrote " << run.greedy_csv.string() << ", "
                  << run.report_csv.string() << ", " << run.trace_csv.string()
                  << "\n";
    }
    return 0;
}

int run_compare(const CommonArgs& args) {
    const auto config = resolve_config(args);
    const auto result = owc::cmd_compare(config, resolve_options(args));
    std::cout << result.csv_text;
    std::cout << "wrote " << result.csv_path.string() << "\n";
    return 0;
}

int run_heatmap(const CommonArgs& args, double grid_step) {
    const auto config = resolve_config(args);
    auto opts = resolve_options(args);
    if (opts.steering == owc::SteeringSelection::both) {
        opts.steering = owc::SteeringSelection::off;  // single-setting default
    }
    opts.heatmap_step_m = grid_step;
    const auto result = owc::cmd_heatmap(config, opts);
    std::cout << "wrote " << result.csv_path.string() << " ("
              << result.cells.size() << " grid points)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Indoor optical wireless downlink allocation simulator"};
    app.require_subcommand(1);

    CommonArgs solve_args, train_args, compare_args, heatmap_args;
    double grid_step = 0.1;

    auto* solve = app.add_subcommand("solve", "Exact optimal assignment");
    add_common(solve, solve_args);

    auto* train = app.add_subcommand("train", "Tabular Q-learning assignment");
    add_common(train, train_args);

    auto* compare =
        app.add_subcommand("compare", "Exact vs. Q-learning, per user and sum");
    add_common(compare, compare_args);

    auto* heatmap = app.add_subcommand("heatmap", "Best-AP SINR sweep of the room");
    add_common(heatmap, heatmap_args);
    heatmap->add_option("--grid-step", grid_step, "Probe grid step in meters")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(solve_args);
        if (train->parsed()) return run_train(train_args);
        if (compare->parsed()) return run_compare(compare_args);
        if (heatmap->parsed()) return run_heatmap(heatmap_args, grid_step);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
