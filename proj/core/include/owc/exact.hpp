#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "owc/sinr.hpp"

namespace owc {

/// Relative tolerance under which two objectives count as tied.
constexpr double kObjectiveTieRelTol = 1e-9;

struct OptimalSolution {
    Assignment assignment;
    SinrReport report;
    double objective_linear = 0.0;
    bool feasible_wrt_min_sinr = false;  // every user met threshold_db
    std::uint64_t n_enumerated = 0;
    std::uint64_t n_feasible = 0;
    std::uint64_t n_ties = 0;  // candidates within kObjectiveTieRelTol of the optimum
};

/// Number of injective user->AP mappings: (L*N)! / (L*N - K)!.
std::uint64_t assignment_count(int num_users, int num_arrays, int aps_per_array);

/// Enumerates every injective mapping of K users onto the L*N APs exactly
/// once, in lexicographic order over (user 1's AP, user 2's AP, ...): user
/// 1's AP varies slowest, and APs order by flat index (array_id-1)*N + ap_id.
/// Throws when K > L*N.
template <typename Fn>
void enumerate_assignments(int num_users, int num_arrays, int aps_per_array,
                           Fn&& visit) {
    const int total = num_arrays * aps_per_array;
    if (num_users > total) {
        throw std::invalid_argument("more users than APs: no assignment exists");
    }
    Assignment current(num_users);
    std::vector<bool> used(total, false);
    auto recurse = [&](auto&& self, int user) -> void {
        if (user > num_users) {
            visit(const_cast<const Assignment&>(current));
            return;
        }
        for (int flat = 0; flat < total; ++flat) {
            if (used[flat]) continue;
            used[flat] = true;
            current.assign(user, ApRef{flat / aps_per_array + 1,
                                       flat % aps_per_array + 1});
            self(self, user + 1);
            used[flat] = false;
        }
    };
    recurse(recurse, 1);
}

/// Materialized enumeration, same order as the streaming form.
std::vector<Assignment> enumerate_assignments(int num_users, int num_arrays,
                                              int aps_per_array);

/// Optimal baseline: scans every assignment, maximizes the linear sum-SINR
/// objective over those meeting the per-user threshold; when none does,
/// returns the unconstrained maximizer flagged infeasible. Ties resolve to
/// the first maximizer in enumeration order.
OptimalSolution solve_exact(const Scene& scene, bool steering_enabled,
                            double threshold_db = kDefaultSinrThresholdDb);

}  // namespace owc
