#pragma once

#include <string>
#include <vector>

#include "owc/assignment.hpp"
#include "owc/geometry.hpp"

namespace owc {

constexpr double kDefaultSinrThresholdDb = 15.6;

struct SinrRow {
    int user_id = 0;
    ApRef serving;
    double signal_a2 = 0.0;
    double interference_a2 = 0.0;
    double noise_a2 = 0.0;
    double sinr_linear = 0.0;
    double sinr_db = 0.0;
};

struct SinrReport {
    std::vector<SinrRow> rows;  // ordered by user_id
    double sum_sinr_linear = 0.0;
    double sum_sinr_db = 0.0;
};

double db_from_linear(double linear);
double linear_from_db(double db);

/// The set of APs currently serving some user, sorted by (array, ap).
/// Throws if the assignment maps two users to one AP.
std::vector<ApRef> active_aps(const Assignment& assignment);

/// Per-user link budget under a (possibly partial) assignment: signal from
/// the serving AP, interference summed over every other active AP, thermal
/// noise. With steering enabled each active AP's spot is steered toward its
/// own assigned user. Throws if user k is unassigned.
SinrRow sinr_of_user(int user_id, const Assignment& assignment, const Scene& scene,
                     bool steering_enabled);

/// Full report over all users plus the sum-SINR objective (linear domain,
/// with its dB image alongside for reporting).
SinrReport evaluate_assignment(const Assignment& assignment, const Scene& scene,
                               bool steering_enabled);

/// Sum over users of linear SINR; the optimization objective.
double sum_sinr(const Assignment& assignment, const Scene& scene,
                bool steering_enabled);

/// Per-user service bits: bit k is 1 iff user k's SINR (dB) meets the
/// threshold, inclusive.
std::vector<int> qos_vector(const SinrReport& report,
                            double threshold_db = kDefaultSinrThresholdDb);

enum class ConstraintKind {
    user_unassigned,      // some user has no AP
    ap_shared,            // one AP serves two users
    sinr_below_threshold  // a served user misses the SINR floor
};

struct Violation {
    ConstraintKind kind;
    int user_id = 0;  // offending user (0 when not applicable)
    ApRef ap;         // offending AP (zeros when not applicable)
    std::string message;
};

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Violation> violations;
};

/// Checks completeness, exclusivity, and the per-user SINR floor against an
/// already computed report.
FeasibilityResult is_feasible(const Assignment& assignment, const SinrReport& report,
                              double threshold_db = kDefaultSinrThresholdDb);

/// CSV serialization with columns
/// user_id,array,ap,signal_a2,interference_a2,noise_a2,sinr_db,qos_bit
std::string sinr_report_csv(const SinrReport& report,
                            double threshold_db = kDefaultSinrThresholdDb);

}  // namespace owc
