#include "owc/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace owc {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void RoomGeometry::validate() const {
    require(finite_positive(width_m), "room width_m must be positive");
    require(finite_positive(length_m), "room length_m must be positive");
    require(finite_positive(height_m), "room height_m must be positive");
    require(std::isfinite(rx_plane_height_m) && rx_plane_height_m > 0.0 &&
                rx_plane_height_m < height_m,
            "rx_plane_height_m must lie strictly between 0 and height_m");
}

void BeamParams::validate() const {
    require(finite_positive(waist_w0_m), "beam waist_w0_m must be positive");
    require(finite_positive(wavelength_m), "beam wavelength_m must be positive");
    require(finite_positive(total_power_w), "beam total_power_w must be positive");
}

void ReceiverParams::validate() const {
    require(std::isfinite(fov_half_angle_deg) && fov_half_angle_deg > 0.0 &&
                fov_half_angle_deg < 90.0,
            "receiver fov_half_angle_deg must be in (0, 90)");
    require(finite_positive(area_m2), "receiver area_m2 must be positive");
    require(finite_positive(responsivity_a_per_w),
            "receiver responsivity_a_per_w must be positive");
    require(finite_positive(bandwidth_hz), "receiver bandwidth_hz must be positive");
    require(finite_positive(nsd_a_per_sqrthz),
            "receiver nsd_a_per_sqrthz must be positive");
}

int Scene::num_arrays() const {
    int l = 0;
    for (const auto& a : aps) l = std::max(l, a.array_id);
    return l;
}

int Scene::aps_per_array() const {
    int n = 0;
    for (const auto& a : aps) n = std::max(n, a.ap_id);
    return n;
}

const AccessPointPose& Scene::ap(int array_id, int ap_id) const {
    for (const auto& a : aps) {
        if (a.array_id == array_id && a.ap_id == ap_id) return a;
    }
    throw std::invalid_argument("no such access point: array " +
                                std::to_string(array_id) + ", ap " +
                                std::to_string(ap_id));
}

const UserPose& Scene::user(int user_id) const {
    for (const auto& u : users) {
        if (u.user_id == user_id) return u;
    }
    throw std::invalid_argument("no such user: " + std::to_string(user_id));
}

void Scene::validate() const {
    room.validate();
    beam.validate();
    receiver.validate();

    const int l_count = num_arrays();
    const int n_count = aps_per_array();
    require(!aps.empty(), "scene has no access points");
    require(static_cast<int>(aps.size()) == l_count * n_count,
            "access points must form a rectangular (array, ap) grid");
    std::vector<bool> seen(static_cast<size_t>(l_count) * n_count, false);
    for (const auto& a : aps) {
        require(a.array_id >= 1 && a.ap_id >= 1, "ap ids are 1-based");
        size_t idx = static_cast<size_t>(a.array_id - 1) * n_count + (a.ap_id - 1);
        require(!seen[idx], "duplicate (array, ap) pair");
        seen[idx] = true;
        require(std::abs(a.position.z - room.height_m) < 1e-9,
                "access point must sit on the ceiling");
        require(room.contains_xy(a.nominal_spot_center.x, a.nominal_spot_center.y),
                "nominal spot center outside the room footprint");
    }

    int next_id = 1;
    for (const auto& u : users) {
        require(u.user_id == next_id++, "user ids must be 1..K in order");
        require(room.contains_xy(u.position.x, u.position.y),
                "user outside the room footprint");
        require(std::abs(u.position.z - room.rx_plane_height_m) < 1e-9,
                "user must sit on the receiving plane");
    }

    require(num_users() <= l_count * n_count,
            "more users than access points (K <= L*N required)");
    require(std::isfinite(max_steer_deg) && max_steer_deg >= 0.0,
            "max_steer_deg must be non-negative");
    require(std::isfinite(threshold_db), "threshold_db must be finite");
}

}  // namespace owc
