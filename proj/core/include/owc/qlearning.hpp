#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "owc/exact.hpp"
#include "owc/sinr.hpp"

namespace owc {

/// Per-user service bits; user k maps to bit k-1, so the packed index is
/// sum of qos_k * 2^(k-1) (user 1 = least significant bit).
struct State {
    std::vector<int> qos_bits;

    int index() const {
        int idx = 0;
        for (size_t k = 0; k < qos_bits.size(); ++k) {
            if (qos_bits[k]) idx |= 1 << k;
        }
        return idx;
    }

    static State from_index(int index, int num_users) {
        State s;
        s.qos_bits.resize(num_users);
        for (int k = 0; k < num_users; ++k) s.qos_bits[k] = (index >> k) & 1;
        return s;
    }

    static State all_unserved(int num_users) { return from_index(0, num_users); }
};

/// Constraint-filtered action list: every complete injective assignment,
/// ordered exactly like enumerate_assignments.
struct ActionSpace {
    std::vector<Assignment> actions;

    int size() const { return static_cast<int>(actions.size()); }
    const Assignment& operator[](int i) const { return actions.at(i); }
};

ActionSpace build_action_space(int num_users, int num_arrays, int aps_per_array);

struct Hyperparams {
    enum class Mode { episodic, continuing };

    double alpha = 0.9;
    double gamma = 0.9;
    double epsilon0 = 1.0;
    double epsilon_min = 0.05;
    double epsilon_decay = 0.999999;  // multiplicative, per episode
    std::uint64_t max_episodes = 500000;
    double convergence_tol = 0.0;  // 0 disables the early stop
    std::uint64_t rng_seed = 1;
    Mode mode = Mode::episodic;

    void validate() const;
};

/// Dense (state x action) table of Q-values and visit counts, zero-initialized.
class QTable {
public:
    QTable(int n_states, int n_actions)
        : n_states_(n_states),
          n_actions_(n_actions),
          values_(static_cast<size_t>(n_states) * n_actions, 0.0),
          visit_counts_(static_cast<size_t>(n_states) * n_actions, 0) {}

    int num_states() const { return n_states_; }
    int num_actions() const { return n_actions_; }

    double value(int state, int action) const { return values_[flat(state, action)]; }
    void set_value(int state, int action, double v) { values_[flat(state, action)] = v; }

    std::uint32_t visit_count(int state, int action) const {
        return visit_counts_[flat(state, action)];
    }
    void record_visit(int state, int action) { ++visit_counts_[flat(state, action)]; }

    /// Largest Q in the state's row; ties resolve to the lowest action index.
    int argmax(int state) const;
    double max_value(int state) const;

    friend bool operator==(const QTable&, const QTable&) = default;

private:
    size_t flat(int state, int action) const {
        return static_cast<size_t>(state) * n_actions_ + action;
    }

    int n_states_;
    int n_actions_;
    std::vector<double> values_;
    std::vector<std::uint32_t> visit_counts_;
};

struct TrainReport {
    std::uint64_t episodes_run = 0;
    bool converged = false;
    double final_epsilon = 0.0;
    int greedy_action_index = -1;
    double greedy_objective_linear = 0.0;
    // (episode, max |dQ|) per non-overlapping sweep of 1000 updates
    std::vector<std::pair<std::uint64_t, double>> q_delta_trace;
};

constexpr std::uint64_t kDeltaSweepWindow = 1000;

/// Deterministic RNG for training: explicit draw primitives so sequences
/// are reproducible across platforms (mt19937_64 is standardized; the
/// stdlib distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return (gen_() >> 11) * 0x1.0p-53; }

    /// Uniform on [0, n), unbiased via rejection.
    std::uint64_t uniform_index(std::uint64_t n);

private:
    std::mt19937_64 gen_;
};

/// One-shot allocation environment: reward and next state depend only on
/// the action, never on the current state.
struct EnvStep {
    double reward = 0.0;  // linear sum-SINR of the action
    State next_state;     // service bits of the action's report
};

EnvStep env_step(const Assignment& action, const Scene& scene, bool steering_enabled);

/// Memoizing wrapper used by the training loop (single-owner, not
/// thread-safe).
class QlEnvironment {
public:
    QlEnvironment(const Scene& scene, ActionSpace actions, bool steering_enabled);

    struct Step {
        double reward;
        int next_state_index;
    };

    Step step(int action_index) const;
    double reward(int action_index) const { return step(action_index).reward; }

    int num_actions() const { return actions_.size(); }
    int num_states() const { return 1 << scene_.num_users(); }
    const ActionSpace& actions() const { return actions_; }
    const Scene& scene() const { return scene_; }
    bool steering_enabled() const { return steering_; }

private:
    Scene scene_;
    ActionSpace actions_;
    bool steering_;
    mutable std::vector<Step> memo_;
    mutable std::vector<char> known_;
};

/// Epsilon-greedy draw: z uniform on [0,1); exploit the argmax when
/// z > epsilon, otherwise a uniformly random action.
int select_action(const QTable& q, const State& state, double epsilon, Rng& rng);

/// Single value-iteration update; returns the new Q(s,a). Episodic mode
/// treats every step as terminal (zero bootstrap).
double q_update(QTable& q, int state, int action, double reward, int next_state,
                const Hyperparams& hp);

struct TrainResult {
    QTable q;
    TrainReport report;
};

/// Runs episodes from the all-unserved state; fully reproducible from
/// hp.rng_seed.
TrainResult train(const Scene& scene, const Hyperparams& hp, bool steering_enabled);

/// Greedy policy at `state`: argmax_a Q(state, a), lowest index on ties.
int extract_policy(const QTable& q, const State& state);

}  // namespace owc
