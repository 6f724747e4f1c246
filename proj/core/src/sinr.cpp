#include "owc/sinr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "owc/channel.hpp"
#include "owc/csv.hpp"

namespace owc {

namespace {

/// Electrical power at `user` from `ap` when that AP serves `target`.
double electrical_power_at(const Scene& scene, const UserPose& user,
                           const AccessPointPose& ap, const UserPose& target,
                           bool steering_enabled) {
    const Vec2 spot = steering_enabled
                          ? steered_spot_center(ap, target, scene.max_steer_deg)
                          : ap.nominal_spot_center;
    const double optical =
        received_optical_power(scene.beam, ap, spot, user, scene.receiver);
    return electrical_signal_power(optical, scene.receiver);
}

}  // namespace

bool Assignment::complete() const {
    return std::all_of(serving_.begin(), serving_.end(),
                       [](const auto& s) { return s.has_value(); });
}

bool Assignment::injective() const {
    std::vector<ApRef> used;
    for (const auto& s : serving_) {
        if (!s) continue;
        if (std::find(used.begin(), used.end(), *s) != used.end()) return false;
        used.push_back(*s);
    }
    return true;
}

double db_from_linear(double linear) { return 10.0 * std::log10(linear); }

double linear_from_db(double db) { return std::pow(10.0, db / 10.0); }

std::vector<ApRef> active_aps(const Assignment& assignment) {
    if (!assignment.injective()) {
        throw std::invalid_argument("malformed assignment: an AP serves two users");
    }
    std::vector<ApRef> active;
    for (int k = 1; k <= assignment.num_users(); ++k) {
        if (assignment.serving(k)) active.push_back(*assignment.serving(k));
    }
    std::sort(active.begin(), active.end());
    return active;
}

SinrRow sinr_of_user(int user_id, const Assignment& assignment, const Scene& scene,
                     bool steering_enabled) {
    const auto& serving = assignment.serving(user_id);
    if (!serving) {
        throw std::invalid_argument("user " + std::to_string(user_id) +
                                    " is unassigned");
    }
    if (!assignment.injective()) {
        throw std::invalid_argument("malformed assignment: an AP serves two users");
    }

    const UserPose& user = scene.user(user_id);
    const AccessPointPose& own_ap = scene.ap(serving->array_id, serving->ap_id);

    SinrRow row;
    row.user_id = user_id;
    row.serving = *serving;
    row.signal_a2 =
        electrical_power_at(scene, user, own_ap, user, steering_enabled);

    // Interference: every other active AP, each steered toward its own user.
    for (int other = 1; other <= assignment.num_users(); ++other) {
        if (other == user_id) continue;
        const auto& other_ap_ref = assignment.serving(other);
        if (!other_ap_ref) continue;
        if (scene.slot_isolation && other_ap_ref->array_id == serving->array_id) {
            continue;
        }
        const AccessPointPose& other_ap =
            scene.ap(other_ap_ref->array_id, other_ap_ref->ap_id);
        row.interference_a2 += electrical_power_at(
            scene, user, other_ap, scene.user(other), steering_enabled);
    }

    row.noise_a2 = thermal_noise_power(scene.receiver);
    row.sinr_linear = row.signal_a2 / (row.interference_a2 + row.noise_a2);
    row.sinr_db = db_from_linear(row.sinr_linear);
    return row;
}

SinrReport evaluate_assignment(const Assignment& assignment, const Scene& scene,
                               bool steering_enabled) {
    SinrReport report;
    report.rows.reserve(assignment.num_users());
    for (int k = 1; k <= assignment.num_users(); ++k) {
        report.rows.push_back(sinr_of_user(k, assignment, scene, steering_enabled));
        report.sum_sinr_linear += report.rows.back().sinr_linear;
    }
    report.sum_sinr_db = db_from_linear(report.sum_sinr_linear);
    return report;
}

double sum_sinr(const Assignment& assignment, const Scene& scene,
                bool steering_enabled) {
    if (!assignment.complete()) {
        throw std::invalid_argument("sum_sinr requires a complete assignment");
    }
    return evaluate_assignment(assignment, scene, steering_enabled).sum_sinr_linear;
}

std::vector<int> qos_vector(const SinrReport& report, double threshold_db) {
    std::vector<int> bits;
    bits.reserve(report.rows.size());
    for (const auto& row : report.rows) {
        bits.push_back(row.sinr_db >= threshold_db ? 1 : 0);
    }
    return bits;
}

FeasibilityResult is_feasible(const Assignment& assignment, const SinrReport& report,
                              double threshold_db) {
    FeasibilityResult result;
    for (int k = 1; k <= assignment.num_users(); ++k) {
        if (!assignment.serving(k)) {
            result.violations.push_back(
                {ConstraintKind::user_unassigned, k, {},
                 "user " + std::to_string(k) + " has no AP"});
        }
    }
    // exclusivity: no AP serving two users
    for (int k = 1; k <= assignment.num_users(); ++k) {
        if (!assignment.serving(k)) continue;
        for (int j = k + 1; j <= assignment.num_users(); ++j) {
            if (assignment.serving(j) && *assignment.serving(j) == *assignment.serving(k)) {
                result.violations.push_back(
                    {ConstraintKind::ap_shared, j, *assignment.serving(k),
                     "array " + std::to_string(assignment.serving(k)->array_id) +
                         " ap " + std::to_string(assignment.serving(k)->ap_id) +
                         " serves users " + std::to_string(k) + " and " +
                         std::to_string(j)});
            }
        }
    }
    for (const auto& row : report.rows) {
        if (row.sinr_db < threshold_db) {
            result.violations.push_back(
                {ConstraintKind::sinr_below_threshold, row.user_id, row.serving,
                 "user " + std::to_string(row.user_id) + " at " +
                     csv_num(row.sinr_db) + " dB misses " + csv_num(threshold_db) +
                     " dB"});
        }
    }
    result.feasible = result.violations.empty();
    return result;
}

std::string sinr_report_csv(const SinrReport& report, double threshold_db) {
    CsvBuilder csv(
        "user_id,array,ap,signal_a2,interference_a2,noise_a2,sinr_db,qos_bit");
    for (const auto& row : report.rows) {
        csv.row(row.user_id, row.serving.array_id, row.serving.ap_id, row.signal_a2,
                row.interference_a2, row.noise_a2, row.sinr_db,
                row.sinr_db >= threshold_db ? 1 : 0);
    }
    return csv.str();
}

}  // namespace owc
