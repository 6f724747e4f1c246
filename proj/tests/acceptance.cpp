// Acceptance suite: exercises the full pipeline on the two standard
// scenarios plus the physics and learning property suites, printing one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "owc/channel.hpp"
#include "owc/commands.hpp"
#include "owc/exact.hpp"
#include "owc/qlearning.hpp"
#include "owc/scenario.hpp"
#include "toy_scenes.hpp"

using namespace owc;
namespace fs = std::filesystem;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("owc_accept_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

bool rel_equal(double a, double b, double tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= tol * scale;
}

// Results shared between criteria so the heavy runs happen once.
SolveResult g_solve1, g_solve2;
TrainResultSet g_train1, g_train2;

void criterion1(Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    CliOptions opts;
    opts.out_dir = fresh_dir("c1");
    g_solve1 = cmd_solve(scenario1_preset(), opts);
    const double elapsed = seconds_since(start);

    c.expect(elapsed < 10.0, "solve ran " + std::to_string(elapsed) + " s");
    for (const auto& run : g_solve1.runs) {
        for (const auto& row : run.solution.report.rows) {
            c.expect(row.serving.array_id == row.user_id,
                     "user " + std::to_string(row.user_id) + " not on array " +
                         std::to_string(row.user_id));
            c.expect(row.sinr_db >= 15.6,
                     "user " + std::to_string(row.user_id) + " below 15.6 dB");
        }
        c.expect(run.solution.feasible_wrt_min_sinr, "scenario 1 marked infeasible");
    }
}

void criterion2(Checker& c) {
    CliOptions opts;
    opts.out_dir = fresh_dir("c2");
    g_solve2 = cmd_solve(scenario2_preset(), opts);

    for (const auto& run : g_solve2.runs) {
        std::vector<int> seen_aps;
        for (const auto& row : run.solution.report.rows) {
            c.expect(row.serving.array_id == 4,
                     "user " + std::to_string(row.user_id) + " not on array 4");
            for (int ap : seen_aps) {
                c.expect(ap != row.serving.ap_id, "duplicate AP in scenario 2");
            }
            seen_aps.push_back(row.serving.ap_id);
        }
        c.expect(!run.solution.feasible_wrt_min_sinr,
                 "scenario 2 unexpectedly satisfies the SINR floor");
        c.expect(run.solution.n_feasible == 0, "n_feasible should be 0");
    }
}

void criterion3(Checker& c) {
    for (int scenario = 1; scenario <= 2; ++scenario) {
        const auto start = std::chrono::steady_clock::now();
        CliOptions opts;
        opts.out_dir = fresh_dir("c3_s" + std::to_string(scenario));
        const ScenarioConfig config =
            scenario == 1 ? scenario1_preset() : scenario2_preset();
        TrainResultSet& out = scenario == 1 ? g_train1 : g_train2;
        out = cmd_train(config, opts);
        const double elapsed = seconds_since(start);

        c.expect(elapsed < 300.0, "training ran " + std::to_string(elapsed) + " s");
        for (const auto& run : out.runs) {
            c.expect(run.report.episodes_run <= 500000, "episode budget exceeded");
            c.expect(
                rel_equal(run.report.greedy_objective_linear,
                          run.exact_objective_linear, 1e-9),
                "scenario " + std::to_string(scenario) + " steering " +
                    (run.steering ? "on" : "off") + ": greedy " +
                    std::to_string(run.report.greedy_objective_linear) +
                    " vs exact " + std::to_string(run.exact_objective_linear));
        }
    }
}

void criterion4(Checker& c) {
    // exact objectives, both steering settings
    for (size_t i = 0; i < 2; ++i) {
        c.expect(g_solve2.runs[i].solution.objective_linear <
                     g_solve1.runs[i].solution.objective_linear,
                 "scenario 2 exact sum not below scenario 1");
        c.expect(g_solve2.runs[i].solution.report.sum_sinr_db <
                     g_solve1.runs[i].solution.report.sum_sinr_db,
                 "scenario 2 exact dB sum not below scenario 1");
        c.expect(g_train2.runs[i].report.greedy_objective_linear <
                     g_train1.runs[i].report.greedy_objective_linear,
                 "scenario 2 QL sum not below scenario 1");
    }
}

void criterion5(Checker& c) {
    const Scene scene1 = build_scene(scenario1_preset());
    const Scene scene2 = build_scene(scenario2_preset());
    const std::vector<std::pair<const SolveResult*, const Scene*>> cases = {
        {&g_solve1, &scene1}, {&g_solve2, &scene2}};

    for (const auto& [solve, scene] : cases) {
        const auto& unsteered = solve->runs[0].solution.report;
        const auto& steered = solve->runs[1].solution.report;
        for (size_t k = 0; k < unsteered.rows.size(); ++k) {
            const auto& row_off = unsteered.rows[k];
            const auto& row_on = steered.rows[k];
            c.expect(row_on.sinr_db >= row_off.sinr_db,
                     "steering reduced user " + std::to_string(row_off.user_id));

            const auto& ap =
                scene->ap(row_off.serving.array_id, row_off.serving.ap_id);
            const Vec2 user_xy{scene->users[k].position.x,
                               scene->users[k].position.y};
            const double offset = distance(ap.nominal_spot_center, user_xy);
            if (offset > 0.0) {
                c.expect(row_on.sinr_db > row_off.sinr_db,
                         "offset user " + std::to_string(row_off.user_id) +
                             " saw no strict steering gain");
            }
        }
    }
}

void criterion6(Checker& c) {
    const BeamParams beam{2e-6, 850e-9, 0.02};
    const ReceiverParams rx{40.0, 55e-6, 0.54, 5e9, 4.47e-12};

    // Gaussian power conservation over a 6 W(d) disc, midpoint rule
    const double w = beam_radius(beam, 2.0);
    const int slices = 100000;
    const double dr = 6.0 * w / slices;
    double integral = 0.0;
    for (int i = 0; i < slices; ++i) {
        const double r = (i + 0.5) * dr;
        integral += beam_intensity(beam, 2.0, r) * 2.0 * M_PI * r * dr;
    }
    c.expect(rel_equal(integral, beam.total_power_w, 1e-3),
             "power conservation off by more than 0.1%");

    // monotone beam radius
    double prev = beam_radius(beam, 0.0);
    for (double d = 0.1; d <= 3.0; d += 0.1) {
        const double radius = beam_radius(beam, d);
        c.expect(radius > prev, "beam radius not increasing");
        prev = radius;
    }

    // hard FOV gate: 45 degrees blocked, inside passes unattenuated
    AccessPointPose ap;
    ap.array_id = ap.ap_id = 1;
    ap.position = Vec3{3.0, 1.0, 3.0};
    ap.nominal_spot_center = Vec2{3.0, 1.0};
    const UserPose blocked{1, Vec3{1.0, 1.0, 1.0}};
    c.expect(received_optical_power(beam, ap, ap.nominal_spot_center, blocked,
                                    rx) == 0.0,
             "45-degree incidence not gated");
    const UserPose inside{1, Vec3{2.5, 1.0, 1.0}};
    const double gated =
        received_optical_power(beam, ap, ap.nominal_spot_center, inside, rx);
    const double raw = detector_power_quadrature(
        beam, 2.0, Vec2{2.5, 1.0}, rx.side_m(), ap.nominal_spot_center);
    c.expect(gated == raw, "FOV gate attenuated an in-view link");

    // flat-field agreement when the detector is small against the spot
    c.expect(rx.side_m() < w / 10.0, "detector not small against the spot");
    const Vec2 center{1.0, 1.0};
    const double quad =
        detector_power_quadrature(beam, 2.0, center, rx.side_m(), center);
    const double flat = beam_intensity(beam, 2.0, 0.0) * rx.area_m2;
    c.expect(rel_equal(quad, flat, 1e-3), "quadrature vs flat-field beyond 0.1%");
}

void criterion7(Checker& c) {
    const Scene scene = testing::toy_scene_2x2();
    QlEnvironment env(scene, build_action_space(2, 2, 2), false);
    const int s0 = State::all_unserved(2).index();

    // episodic: Q -> r with geometric rate (1 - alpha)^m
    {
        Hyperparams hp;
        hp.alpha = 0.2;
        hp.epsilon0 = hp.epsilon_min = 1.0;
        hp.epsilon_decay = 1.0;
        hp.max_episodes = 30000;
        hp.mode = Hyperparams::Mode::episodic;
        hp.rng_seed = 11;
        const TrainResult result = train(scene, hp, false);
        for (int a = 0; a < env.num_actions(); ++a) {
            const auto m = result.q.visit_count(s0, a);
            c.expect(m > 0, "action unvisited under pure exploration");
            const double r = env.reward(a);
            const double bound = std::pow(1.0 - hp.alpha, m) * r + 1e-12;
            c.expect(std::abs(result.q.value(s0, a) - r) <= bound,
                     "episodic fixed point misses the geometric bound");
        }
    }

    // continuing: Q(s,a) - r(a) = gamma * r_max / (1 - gamma) within 1e-3
    {
        Hyperparams hp;
        hp.alpha = 0.2;
        hp.gamma = 0.9;
        hp.epsilon0 = hp.epsilon_min = 1.0;
        hp.epsilon_decay = 1.0;
        hp.max_episodes = 300000;
        hp.mode = Hyperparams::Mode::continuing;
        hp.rng_seed = 11;
        const TrainResult result = train(scene, hp, false);

        double r_max = 0.0;
        for (int a = 0; a < env.num_actions(); ++a) {
            r_max = std::max(r_max, env.reward(a));
        }
        const double shift = hp.gamma * r_max / (1.0 - hp.gamma);
        int checked = 0;
        for (int s = 0; s < result.q.num_states(); ++s) {
            for (int a = 0; a < env.num_actions(); ++a) {
                if (result.q.visit_count(s, a) < 50) continue;
                ++checked;
                c.expect(std::abs(result.q.value(s, a) - (env.reward(a) + shift)) <=
                             1e-3 * shift,
                         "continuing fixed point off at state " + std::to_string(s));
            }
        }
        c.expect(checked >= 12, "too few converged (state, action) pairs");
    }

    // oracle equivalence: greedy == brute-force reward argmax, exactly
    {
        Hyperparams hp;
        hp.alpha = 1.0;
        hp.epsilon0 = hp.epsilon_min = 1.0;
        hp.epsilon_decay = 1.0;
        hp.max_episodes = 50000;
        hp.mode = Hyperparams::Mode::episodic;
        hp.rng_seed = 11;
        const TrainResult result = train(scene, hp, false);
        double best = -1.0;
        for (int a = 0; a < env.num_actions(); ++a) {
            best = std::max(best, env.reward(a));
        }
        c.expect(result.report.greedy_objective_linear == best,
                 "greedy objective differs from the reward argmax");
        const OptimalSolution solved = solve_exact(scene, false, -1000.0);
        c.expect(result.report.greedy_objective_linear == solved.objective_linear,
                 "greedy objective differs from the exact optimum");
    }
}

void criterion8(Checker& c) {
    std::uint64_t expected = 1;
    for (int i = 16; i > 12; --i) expected *= i;
    c.expect(expected == 43680, "derived count is wrong");

    const auto enumerated = enumerate_assignments(4, 4, 4);
    const ActionSpace actions = build_action_space(4, 4, 4);
    c.expect(enumerated.size() == 43680, "enumeration count mismatch");
    c.expect(actions.size() == 43680, "action space count mismatch");
    for (size_t i = 0; i < enumerated.size(); ++i) {
        if (!(actions[static_cast<int>(i)] == enumerated[i])) {
            c.expect(false, "ordering diverges at index " + std::to_string(i));
            break;
        }
    }
}

void criterion9(Checker& c) {
    const ScenarioConfig config = scenario1_preset();

    CliOptions opts;
    opts.out_dir = fresh_dir("c9_a");
    const auto solve_a = cmd_solve(config, opts);
    const auto train_a = cmd_train(config, opts);
    opts.heatmap_step_m = 0.25;
    opts.steering = SteeringSelection::off;
    const auto heat_a = cmd_heatmap(config, opts);
    opts.steering = SteeringSelection::both;
    const auto compare_a = cmd_compare(scenario2_preset(), opts);

    opts = CliOptions{};
    opts.out_dir = fresh_dir("c9_b");
    const auto solve_b = cmd_solve(config, opts);
    const auto train_b = cmd_train(config, opts);
    opts.heatmap_step_m = 0.25;
    opts.steering = SteeringSelection::off;
    const auto heat_b = cmd_heatmap(config, opts);
    opts.steering = SteeringSelection::both;
    const auto compare_b = cmd_compare(scenario2_preset(), opts);

    c.expect(slurp(solve_a.csv_path) == slurp(solve_b.csv_path),
             "solve CSV differs between runs");
    for (size_t i = 0; i < train_a.runs.size(); ++i) {
        c.expect(slurp(train_a.runs[i].greedy_csv) ==
                     slurp(train_b.runs[i].greedy_csv),
                 "train greedy CSV differs");
        c.expect(slurp(train_a.runs[i].report_csv) ==
                     slurp(train_b.runs[i].report_csv),
                 "train report CSV differs");
        c.expect(slurp(train_a.runs[i].trace_csv) ==
                     slurp(train_b.runs[i].trace_csv),
                 "train trace CSV differs");
    }
    c.expect(slurp(heat_a.csv_path) == slurp(heat_b.csv_path),
             "heatmap CSV differs");
    c.expect(compare_a.csv_text == compare_b.csv_text, "compare CSV differs");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Checker&)>>>
        criteria = {
            {"scenario 1 allocation pattern and SINR floor", criterion1},
            {"scenario 2 allocation pattern, flagged infeasibility", criterion2},
            {"Q-learning matches the exact objective (both presets/settings)",
             criterion3},
            {"scenario 2 sum SINR strictly below scenario 1", criterion4},
            {"steering never hurts, strictly helps offset users", criterion5},
            {"channel physics suite", criterion6},
            {"Q-learning fixed-point suite", criterion7},
            {"combinatorics: 43680 actions, identical ordering", criterion8},
            {"byte-identical CSVs on repeated runs", criterion9},
        };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Checker checker;
        try {
            criteria[i].second(checker);
        } catch (const std::exception& e) {
            checker.ok = false;
            checker.detail = std::string("exception: ") + e.what();
        }
        if (checker.ok) {
            std::cout << "criterion " << (i + 1) << " (" << criteria[i].first
                      << "): PASS\n";
        } else {
            ++failures;
            std::cout << "criterion " << (i + 1) << " (" << criteria[i].first
                      << "): FAIL - " << checker.detail << "\n";
        }
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
    }
    return failures == 0 ? 0 : 1;
}
