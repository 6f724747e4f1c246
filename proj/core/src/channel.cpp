#include "owc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace owc {

namespace {

void require_finite_nonneg(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument(std::string(what) +
                                    " must be finite and non-negative");
    }
}

}  // namespace

double beam_radius(const BeamParams& beam, double axial_distance_m) {
    beam.validate();
    require_finite_nonneg(axial_distance_m, "axial_distance_m");
    const double zr = beam.rayleigh_range_m();
    const double ratio = axial_distance_m / zr;
    return beam.waist_w0_m * std::sqrt(1.0 + ratio * ratio);
}

double beam_intensity(const BeamParams& beam, double axial_distance_m,
                      double radial_offset_m) {
    require_finite_nonneg(radial_offset_m, "radial_offset_m");
    const double w = beam_radius(beam, axial_distance_m);
    const double w2 = w * w;
    return 2.0 * beam.total_power_w / (M_PI * w2) *
           std::exp(-2.0 * radial_offset_m * radial_offset_m / w2);
}

double incidence_angle_deg(const UserPose& user, const Vec3& point) {
    const double vx = point.x - user.position.x;
    const double vy = point.y - user.position.y;
    const double vz = point.z - user.position.z;
    const double vnorm = std::sqrt(vx * vx + vy * vy + vz * vz);
    const double nnorm = std::sqrt(user.normal.x * user.normal.x +
                                   user.normal.y * user.normal.y +
                                   user.normal.z * user.normal.z);
    if (vnorm == 0.0 || nnorm == 0.0) {
        throw std::invalid_argument("degenerate incidence geometry");
    }
    const double cosang =
        (vx * user.normal.x + vy * user.normal.y + vz * user.normal.z) /
        (vnorm * nnorm);
    return std::acos(std::clamp(cosang, -1.0, 1.0)) * 180.0 / M_PI;
}

double detector_power_quadrature(const BeamParams& beam, double axial_distance_m,
                                 const Vec2& detector_center, double side_m,
                                 const Vec2& spot_center, int grid_n) {
    if (grid_n < 1) throw std::invalid_argument("grid_n must be >= 1");
    require_finite_nonneg(side_m, "side_m");
    const double w = beam_radius(beam, axial_distance_m);
    const double w2 = w * w;
    const double peak = 2.0 * beam.total_power_w / (M_PI * w2);
    const double h = side_m / grid_n;
    const double x0 = detector_center.x - 0.5 * side_m;
    const double y0 = detector_center.y - 0.5 * side_m;
    double total = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        const double x = x0 + (i + 0.5) * h;
        const double dx = x - spot_center.x;
        for (int j = 0; j < grid_n; ++j) {
            const double y = y0 + (j + 0.5) * h;
            const double dy = y - spot_center.y;
            total += std::exp(-2.0 * (dx * dx + dy * dy) / w2);
        }
    }
    return peak * total * h * h;
}

double received_optical_power(const BeamParams& beam, const AccessPointPose& ap,
                              const Vec2& spot_center, const UserPose& user,
                              const ReceiverParams& rx, int grid_n) {
    rx.validate();
    if (incidence_angle_deg(user, ap.position) > rx.fov_half_angle_deg) {
        return 0.0;
    }
    const double drop = ap.position.z - user.position.z;
    require_finite_nonneg(drop, "axial drop from AP to user");
    return detector_power_quadrature(
        beam, drop, Vec2{user.position.x, user.position.y}, rx.side_m(),
        spot_center, grid_n);
}

double electrical_signal_power(double optical_power_w, const ReceiverParams& rx) {
    require_finite_nonneg(optical_power_w, "optical_power_w");
    const double photocurrent = rx.responsivity_a_per_w * optical_power_w;
    return photocurrent * photocurrent;
}

double thermal_noise_power(const ReceiverParams& rx) {
    return rx.nsd_a_per_sqrthz * rx.nsd_a_per_sqrthz * rx.bandwidth_hz;
}

Vec2 steered_spot_center(const AccessPointPose& ap, const UserPose& user,
                         double max_steer_deg) {
    require_finite_nonneg(max_steer_deg, "max_steer_deg");
    const Vec2 nominal = ap.nominal_spot_center;
    if (max_steer_deg == 0.0) return nominal;
    const Vec2 target{user.position.x, user.position.y};
    const double dist = distance(target, nominal);
    if (dist == 0.0) return nominal;
    const double drop = ap.position.z - user.position.z;
    const double max_move = drop * std::tan(max_steer_deg * M_PI / 180.0);
    if (dist <= max_move) return target;
    const double scale = max_move / dist;
    return Vec2{nominal.x + (target.x - nominal.x) * scale,
                nominal.y + (target.y - nominal.y) * scale};
}

}  // namespace owc
