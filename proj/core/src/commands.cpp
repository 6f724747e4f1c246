#include "owc/commands.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "owc/channel.hpp"
#include "owc/csv.hpp"

namespace owc {

namespace {

const char* steer_label(bool steering) { return steering ? "on" : "off"; }

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path().empty()
                                            ? "."
                                            : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

bool objectives_match(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= kObjectiveTieRelTol * scale;
}

Hyperparams effective_hp(const ScenarioConfig& config, const CliOptions& opts) {
    Hyperparams hp = config.ql;
    if (opts.seed) hp.rng_seed = *opts.seed;
    return hp;
}

void append_user_rows_with_prefix(CsvBuilder& csv, const std::string& prefix,
                                  const SinrReport& report, double threshold_db,
                                  const std::string& suffix_blanks) {
    for (const auto& row : report.rows) {
        csv.line(prefix + "," + csv_num(row.user_id) + "," +
                 csv_num(row.serving.array_id) + "," + csv_num(row.serving.ap_id) +
                 "," + csv_num(row.signal_a2) + "," + csv_num(row.interference_a2) +
                 "," + csv_num(row.noise_a2) + "," + csv_num(row.sinr_db) + "," +
                 (row.sinr_db >= threshold_db ? "1" : "0") + suffix_blanks);
    }
}

}  // namespace

std::vector<bool> steering_variants(SteeringSelection sel) {
    switch (sel) {
        case SteeringSelection::off:
            return {false};
        case SteeringSelection::on:
            return {true};
        case SteeringSelection::both:
            return {false, true};
    }
    throw std::logic_error("unreachable steering selection");
}

SolveResult cmd_solve(const ScenarioConfig& config, const CliOptions& opts) {
    const Scene scene = build_scene(config);

    SolveResult result;
    CsvBuilder csv(
        "steering,user_id,array,ap,signal_a2,interference_a2,noise_a2,sinr_db,"
        "qos_bit,objective_linear,sum_sinr_db,feasible,n_enumerated,n_feasible,"
        "n_ties");
    for (bool steering : steering_variants(opts.steering)) {
        OptimalSolution solution =
            solve_exact(scene, steering, config.threshold_db);
        append_user_rows_with_prefix(csv, steer_label(steering), solution.report,
                                     config.threshold_db, ",,,,,,");
        csv.line(std::string(steer_label(steering)) + ",all,,,,,,,," +
                 csv_num(solution.objective_linear) + "," +
                 csv_num(solution.report.sum_sinr_db) + "," +
                 (solution.feasible_wrt_min_sinr ? "1" : "0") + "," +
                 csv_num(static_cast<unsigned long long>(solution.n_enumerated)) +
                 "," +
                 csv_num(static_cast<unsigned long long>(solution.n_feasible)) +
                 "," + csv_num(static_cast<unsigned long long>(solution.n_ties)));
        result.runs.push_back(SolveRun{steering, std::move(solution)});
    }

    result.csv_path = opts.out_dir / ("exact_" + config.name + ".csv");
    write_file(result.csv_path, csv.str());
    return result;
}

TrainResultSet cmd_train(const ScenarioConfig& config, const CliOptions& opts) {
    const Scene scene = build_scene(config);
    const Hyperparams hp = effective_hp(config, opts);

    TrainResultSet result;
    for (bool steering : steering_variants(opts.steering)) {
        const ActionSpace actions = build_action_space(
            scene.num_users(), scene.num_arrays(), scene.aps_per_array());
        TrainResult trained = train(scene, hp, steering);
        const OptimalSolution exact =
            solve_exact(scene, steering, config.threshold_db);

        TrainRun run;
        run.steering = steering;
        run.report = trained.report;
        run.greedy = actions[trained.report.greedy_action_index];
        run.greedy_report = evaluate_assignment(run.greedy, scene, steering);
        run.exact_objective_linear = exact.objective_linear;
        run.matches_exact = objectives_match(
            trained.report.greedy_objective_linear, exact.objective_linear);
        run.greedy_feasible =
            is_feasible(run.greedy, run.greedy_report, config.threshold_db)
                .feasible;

        const std::string tag = config.name + "_" + steer_label(steering);
        run.greedy_csv = opts.out_dir / ("train_greedy_" + tag + ".csv");
        write_file(run.greedy_csv,
                   sinr_report_csv(run.greedy_report, config.threshold_db));

        CsvBuilder report_csv(
            "episodes_run,converged,final_epsilon,greedy_action_index,"
            "greedy_objective_linear,exact_objective_linear,matches_exact,"
            "greedy_feasible");
        report_csv.row(
            static_cast<unsigned long long>(run.report.episodes_run),
            run.report.converged ? 1 : 0, run.report.final_epsilon,
            run.report.greedy_action_index, run.report.greedy_objective_linear,
            run.exact_objective_linear, run.matches_exact ? 1 : 0,
            run.greedy_feasible ? 1 : 0);
        run.report_csv = opts.out_dir / ("train_report_" + tag + ".csv");
        write_file(run.report_csv, report_csv.str());

        CsvBuilder trace_csv("episode,max_abs_delta");
        for (const auto& [episode, delta] : run.report.q_delta_trace) {
            trace_csv.row(static_cast<unsigned long long>(episode), delta);
        }
        run.trace_csv = opts.out_dir / ("train_trace_" + tag + ".csv");
        write_file(run.trace_csv, trace_csv.str());

        result.runs.push_back(std::move(run));
    }
    return result;
}

CompareResult cmd_compare(const ScenarioConfig& config, const CliOptions& opts) {
    const Scene scene = build_scene(config);
    const Hyperparams hp = effective_hp(config, opts);

    CsvBuilder csv("method,steering,user_id,array,ap,sinr_db,sum_sinr_linear,sum_sinr_db");
    auto emit = [&](const std::string& method, bool steering,
                    const SinrReport& report) {
        for (const auto& row : report.rows) {
            csv.line(method + "," + steer_label(steering) + "," +
                     csv_num(row.user_id) + "," + csv_num(row.serving.array_id) +
                     "," + csv_num(row.serving.ap_id) + "," +
                     csv_num(row.sinr_db) + ",,");
        }
        csv.line(method + "," + steer_label(steering) + ",all,,,," +
                 csv_num(report.sum_sinr_linear) + "," +
                 csv_num(report.sum_sinr_db));
    };

    for (bool steering : steering_variants(opts.steering)) {
        const OptimalSolution exact =
            solve_exact(scene, steering, config.threshold_db);
        emit("exact", steering, exact.report);

        const ActionSpace actions = build_action_space(
            scene.num_users(), scene.num_arrays(), scene.aps_per_array());
        const TrainResult trained = train(scene, hp, steering);
        const Assignment greedy = actions[trained.report.greedy_action_index];
        emit("ql", steering, evaluate_assignment(greedy, scene, steering));
    }

    CompareResult result;
    result.csv_text = csv.str();
    result.csv_path = opts.out_dir / ("compare_" + config.name + ".csv");
    write_file(result.csv_path, result.csv_text);
    return result;
}

HeatmapResult cmd_heatmap(const ScenarioConfig& config, const CliOptions& opts) {
    if (opts.steering == SteeringSelection::both) {
        throw std::invalid_argument("heatmap needs a single steering setting");
    }
    if (!(opts.heatmap_step_m > 0.0)) {
        throw std::invalid_argument("heatmap grid step must be positive");
    }
    const bool steering = opts.steering == SteeringSelection::on;

    Scene scene = build_scene(config);
    scene.users.clear();
    scene.users.push_back(UserPose{1, Vec3{0.0, 0.0, scene.room.rx_plane_height_m}});

    const double step = opts.heatmap_step_m;
    const int nx = static_cast<int>(scene.room.width_m / step + 1e-9) + 1;
    const int ny = static_cast<int>(scene.room.length_m / step + 1e-9) + 1;
    const int aps_per_array = scene.aps_per_array();

    HeatmapResult result;
    CsvBuilder csv("x,y,best_ap,sinr_db");
    Assignment probe_assignment(1);
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            scene.users[0].position.x = i * step;
            scene.users[0].position.y = j * step;

            HeatmapCell cell{scene.users[0].position.x,
                             scene.users[0].position.y, 0,
                             -std::numeric_limits<double>::infinity()};
            double best_linear = -1.0;
            for (const auto& ap : scene.aps) {
                probe_assignment.assign(1, ApRef{ap.array_id, ap.ap_id});
                const SinrRow row =
                    sinr_of_user(1, probe_assignment, scene, steering);
                if (row.sinr_linear > best_linear) {
                    best_linear = row.sinr_linear;
                    cell.best_ap = (ap.array_id - 1) * aps_per_array + ap.ap_id;
                    cell.sinr_db = row.sinr_db;
                }
            }
            csv.row(cell.x, cell.y, cell.best_ap, cell.sinr_db);
            result.cells.push_back(cell);
        }
    }

    result.csv_path = opts.out_dir / ("heatmap_" + config.name + ".csv");
    write_file(result.csv_path, csv.str());
    return result;
}

}  // namespace owc
