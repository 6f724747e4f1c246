#pragma once

#include "owc/geometry.hpp"

namespace owc {

/// Gaussian beam radius W(d) = W0 * sqrt(1 + (d / z_R)^2).
double beam_radius(const BeamParams& beam, double axial_distance_m);

/// Transverse intensity I(r, d) = 2 P / (pi W(d)^2) * exp(-2 r^2 / W(d)^2),
/// in W/m^2. Integrates to total_power_w over the infinite transverse plane.
double beam_intensity(const BeamParams& beam, double axial_distance_m,
                      double radial_offset_m);

/// Angle in degrees between the user's normal and the line from the user to
/// a point (typically an AP position on the ceiling).
double incidence_angle_deg(const UserPose& user, const Vec3& point);

/// Midpoint quadrature of the beam intensity over a square, axis-aligned
/// detector of side side_m centered at detector_center, with the radial
/// offset measured from spot_center. No field-of-view gating.
double detector_power_quadrature(const BeamParams& beam, double axial_distance_m,
                                 const Vec2& detector_center, double side_m,
                                 const Vec2& spot_center, int grid_n = 8);

/// Optical power collected by the user's detector from one AP whose beam
/// spot sits at spot_center on the receiving plane. Zero when the AP lies
/// outside the receiver field of view; otherwise the detector quadrature.
double received_optical_power(const BeamParams& beam, const AccessPointPose& ap,
                              const Vec2& spot_center, const UserPose& user,
                              const ReceiverParams& rx, int grid_n = 8);

/// Electrical signal power after photodetection: (R * P_opt)^2, in A^2.
double electrical_signal_power(double optical_power_w, const ReceiverParams& rx);

/// Thermal noise power at the receiver preamplifier: NSD^2 * bandwidth, in A^2.
double thermal_noise_power(const ReceiverParams& rx);

/// Beam-axis intersection with the receiving plane after tilting the beam
/// from its nominal (vertical) axis toward the user by at most max_steer_deg.
/// Lands exactly on the user when the user is inside the steerable cone;
/// otherwise moves d*tan(max_steer_deg) from the nominal center toward the
/// user, d being the vertical drop to the user's plane.
Vec2 steered_spot_center(const AccessPointPose& ap, const UserPose& user,
                         double max_steer_deg);

}  // namespace owc
