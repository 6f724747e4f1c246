#include "owc/exact.hpp"

#include <cmath>

namespace owc {

std::uint64_t assignment_count(int num_users, int num_arrays, int aps_per_array) {
    const int total = num_arrays * aps_per_array;
    if (num_users > total) {
        throw std::invalid_argument("more users than APs: no assignment exists");
    }
    std::uint64_t count = 1;
    for (int i = 0; i < num_users; ++i) {
        count *= static_cast<std::uint64_t>(total - i);
    }
    return count;
}

std::vector<Assignment> enumerate_assignments(int num_users, int num_arrays,
                                              int aps_per_array) {
    std::vector<Assignment> all;
    all.reserve(assignment_count(num_users, num_arrays, aps_per_array));
    enumerate_assignments(num_users, num_arrays, aps_per_array,
                          [&](const Assignment& a) { all.push_back(a); });
    return all;
}

OptimalSolution solve_exact(const Scene& scene, bool steering_enabled,
                            double threshold_db) {
    scene.validate();
    const int num_users = scene.num_users();

    struct Candidate {
        double objective;
        bool feasible;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(
        assignment_count(num_users, scene.num_arrays(), scene.aps_per_array()));

    OptimalSolution best;
    Assignment best_any, best_feasible;
    double best_any_obj = -1.0, best_feasible_obj = -1.0;

    enumerate_assignments(
        num_users, scene.num_arrays(), scene.aps_per_array(),
        [&](const Assignment& a) {
            const SinrReport report = evaluate_assignment(a, scene, steering_enabled);
            bool feasible = true;
            for (const auto& row : report.rows) {
                if (row.sinr_db < threshold_db) {
                    feasible = false;
                    break;
                }
            }
            candidates.push_back({report.sum_sinr_linear, feasible});
            if (feasible) {
                ++best.n_feasible;
                if (report.sum_sinr_linear > best_feasible_obj) {
                    best_feasible_obj = report.sum_sinr_linear;
                    best_feasible = a;
                }
            }
            if (report.sum_sinr_linear > best_any_obj) {
                best_any_obj = report.sum_sinr_linear;
                best_any = a;
            }
        });

    best.n_enumerated = candidates.size();
    best.feasible_wrt_min_sinr = best.n_feasible > 0;
    best.assignment = best.feasible_wrt_min_sinr ? best_feasible : best_any;
    best.report = evaluate_assignment(best.assignment, scene, steering_enabled);
    best.objective_linear = best.report.sum_sinr_linear;

    const double tol = kObjectiveTieRelTol * std::abs(best.objective_linear);
    for (const auto& c : candidates) {
        if (best.feasible_wrt_min_sinr && !c.feasible) continue;
        if (std::abs(c.objective - best.objective_linear) <= tol) ++best.n_ties;
    }
    return best;
}

}  // namespace owc
