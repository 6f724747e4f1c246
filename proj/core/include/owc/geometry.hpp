#pragma once

#include <cmath>
#include <vector>

namespace owc {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline double distance(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Indoor room with the receiving plane parallel to the floor.
struct RoomGeometry {
    double width_m = 0.0;   // x extent
    double length_m = 0.0;  // y extent
    double height_m = 0.0;  // z extent, ceiling height
    double rx_plane_height_m = 0.0;

    // throws std::invalid_argument on non-positive dimensions or a
    // receiving plane outside (0, height)
    void validate() const;

    bool contains_xy(double x, double y) const {
        return x >= 0.0 && x <= width_m && y >= 0.0 && y <= length_m;
    }
};

/// Gaussian beam source. total_power_w aggregates all co-located emitters
/// of one access point.
struct BeamParams {
    double waist_w0_m = 0.0;    // 1/e^2 field radius at the source
    double wavelength_m = 0.0;
    double total_power_w = 0.0;

    void validate() const;

    double rayleigh_range_m() const {
        return M_PI * waist_w0_m * waist_w0_m / wavelength_m;
    }
};

/// One access point: a downward-pointing beam source on the ceiling.
/// nominal_spot_center is where the unsteered beam axis meets the
/// receiving plane.
struct AccessPointPose {
    int array_id = 0;  // 1-based
    int ap_id = 0;     // 1-based within the array
    Vec3 position;
    Vec2 nominal_spot_center;
};

struct ReceiverParams {
    double fov_half_angle_deg = 0.0;
    double area_m2 = 0.0;
    double responsivity_a_per_w = 0.0;
    double bandwidth_hz = 0.0;
    double nsd_a_per_sqrthz = 0.0;

    void validate() const;

    double side_m() const { return std::sqrt(area_m2); }
};

struct UserPose {
    int user_id = 0;  // 1-based
    Vec3 position;
    Vec3 normal{0.0, 0.0, 1.0};  // receiver points straight up
};

/// Immutable description of one evaluation scene: room, sources, receivers.
/// APs form a rectangular (array_id, ap_id) grid: array_id in 1..L,
/// ap_id in 1..N, each pair present exactly once.
struct Scene {
    RoomGeometry room;
    BeamParams beam;
    ReceiverParams receiver;
    std::vector<AccessPointPose> aps;
    std::vector<UserPose> users;
    double max_steer_deg = 0.0;
    double threshold_db = 15.6;
    bool slot_isolation = false;

    int num_arrays() const;     // L
    int aps_per_array() const;  // N
    int num_users() const { return static_cast<int>(users.size()); }

    const AccessPointPose& ap(int array_id, int ap_id) const;
    const UserPose& user(int user_id) const;

    // throws std::invalid_argument if the AP grid is not rectangular,
    // user ids are not 1..K, or users are off the receiving plane
    void validate() const;
};

}  // namespace owc
