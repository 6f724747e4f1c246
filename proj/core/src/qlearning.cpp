#include "owc/qlearning.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace owc {

namespace {

/// Value-iteration step shared by q_update and the training loop so both
/// produce bitwise-identical arithmetic.
inline double apply_update(double old_q, double reward, double bootstrap,
                           double alpha, double gamma) {
    return (1.0 - alpha) * old_q + alpha * (reward + gamma * bootstrap);
}

}  // namespace

ActionSpace build_action_space(int num_users, int num_arrays, int aps_per_array) {
    return ActionSpace{enumerate_assignments(num_users, num_arrays, aps_per_array)};
}

void Hyperparams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must be in (0, 1]");
    }
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw std::invalid_argument("gamma must be in [0, 1)");
    }
    if (!(epsilon_min >= 0.0 && epsilon_min <= epsilon0 && epsilon0 <= 1.0)) {
        throw std::invalid_argument("need 0 <= epsilon_min <= epsilon0 <= 1");
    }
    if (!(epsilon_decay > 0.0 && epsilon_decay <= 1.0)) {
        throw std::invalid_argument("epsilon_decay must be in (0, 1]");
    }
    if (max_episodes == 0) {
        throw std::invalid_argument("max_episodes must be positive");
    }
    if (!(convergence_tol >= 0.0) || !std::isfinite(convergence_tol)) {
        throw std::invalid_argument("convergence_tol must be non-negative");
    }
}

int QTable::argmax(int state) const {
    int best = 0;
    double best_v = value(state, 0);
    for (int a = 1; a < n_actions_; ++a) {
        const double v = value(state, a);
        if (v > best_v) {
            best_v = v;
            best = a;
        }
    }
    return best;
}

double QTable::max_value(int state) const { return value(state, argmax(state)); }

std::uint64_t Rng::uniform_index(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index over empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return x % n;
}

EnvStep env_step(const Assignment& action, const Scene& scene,
                 bool steering_enabled) {
    const SinrReport report = evaluate_assignment(action, scene, steering_enabled);
    EnvStep step;
    step.reward = report.sum_sinr_linear;
    step.next_state = State{qos_vector(report, scene.threshold_db)};
    return step;
}

QlEnvironment::QlEnvironment(const Scene& scene, ActionSpace actions,
                             bool steering_enabled)
    : scene_(scene),
      actions_(std::move(actions)),
      steering_(steering_enabled),
      memo_(actions_.size()),
      known_(actions_.size(), 0) {}

QlEnvironment::Step QlEnvironment::step(int action_index) const {
    if (!known_.at(action_index)) {
        const EnvStep s = env_step(actions_[action_index], scene_, steering_);
        memo_[action_index] = Step{s.reward, s.next_state.index()};
        known_[action_index] = 1;
    }
    return memo_[action_index];
}

int select_action(const QTable& q, const State& state, double epsilon, Rng& rng) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("epsilon must be in [0, 1]");
    }
    const double z = rng.uniform01();
    if (z > epsilon) return q.argmax(state.index());
    return static_cast<int>(rng.uniform_index(q.num_actions()));
}

double q_update(QTable& q, int state, int action, double reward, int next_state,
                const Hyperparams& hp) {
    const double bootstrap = hp.mode == Hyperparams::Mode::continuing
                                 ? q.max_value(next_state)
                                 : 0.0;
    const double new_q =
        apply_update(q.value(state, action), reward, bootstrap, hp.alpha, hp.gamma);
    q.set_value(state, action, new_q);
    q.record_visit(state, action);
    return new_q;
}

TrainResult train(const Scene& scene, const Hyperparams& hp, bool steering_enabled) {
    hp.validate();
    scene.validate();

    QlEnvironment env(scene,
                      build_action_space(scene.num_users(), scene.num_arrays(),
                                         scene.aps_per_array()),
                      steering_enabled);
    const int n_states = env.num_states();
    const int n_actions = env.num_actions();

    TrainResult out{QTable(n_states, n_actions), TrainReport{}};
    QTable& q = out.q;
    TrainReport& report = out.report;

    Rng rng(hp.rng_seed);

    // Running per-row maximum. Valid because updates never decrease a Q
    // value (zero init, non-negative rewards), so it stays equal to a full
    // row scan with lowest-index tie-breaking.
    std::vector<double> row_max(n_states, 0.0);
    std::vector<int> row_argmax(n_states, 0);

    const int start_state = State::all_unserved(scene.num_users()).index();
    int state = start_state;
    double epsilon = hp.epsilon0;
    double sweep_max = 0.0;
    std::uint64_t sweep_updates = 0;

    for (std::uint64_t episode = 1; episode <= hp.max_episodes; ++episode) {
        const double z = rng.uniform01();
        const int action = z > epsilon
                               ? row_argmax[state]
                               : static_cast<int>(rng.uniform_index(n_actions));

        const QlEnvironment::Step step = env.step(action);
        const double bootstrap = hp.mode == Hyperparams::Mode::continuing
                                     ? row_max[step.next_state_index]
                                     : 0.0;
        const double old_q = q.value(state, action);
        const double new_q =
            apply_update(old_q, step.reward, bootstrap, hp.alpha, hp.gamma);
        q.set_value(state, action, new_q);
        q.record_visit(state, action);
        if (new_q > row_max[state]) {
            row_max[state] = new_q;
            row_argmax[state] = action;
        } else if (new_q == row_max[state] && action < row_argmax[state]) {
            row_argmax[state] = action;
        }

        report.episodes_run = episode;
        epsilon = std::max(hp.epsilon_min, epsilon * hp.epsilon_decay);

        const double delta = std::abs(new_q - old_q);
        if (delta > sweep_max) sweep_max = delta;
        if (++sweep_updates == kDeltaSweepWindow) {
            report.q_delta_trace.emplace_back(episode, sweep_max);
            const bool settled = hp.convergence_tol > 0.0 &&
                                 sweep_max < hp.convergence_tol;
            sweep_max = 0.0;
            sweep_updates = 0;
            if (settled) {
                report.converged = true;
                break;
            }
        }

        state = hp.mode == Hyperparams::Mode::continuing ? step.next_state_index
                                                         : start_state;
    }

    report.final_epsilon = epsilon;
    report.greedy_action_index =
        extract_policy(q, State::all_unserved(scene.num_users()));
    report.greedy_objective_linear = env.reward(report.greedy_action_index);
    return out;
}

int extract_policy(const QTable& q, const State& state) {
    return q.argmax(state.index());
}

}  // namespace owc
