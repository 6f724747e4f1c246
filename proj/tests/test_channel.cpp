#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "owc/channel.hpp"

using namespace owc;

namespace {

const BeamParams kBeam{2e-6, 850e-9, 0.02};  // 4 x 5 mW aggregated per AP
const ReceiverParams kRx{40.0, 55e-6, 0.54, 5e9, 4.47e-12};

// Oracle values evaluated from the closed forms at high precision before
// the implementation existed.
constexpr double kRayleighRange = 1.4783965428657849e-05;
constexpr double kRadiusAt2m = 0.27056340326361406;
constexpr double kOnAxisIntensityAt2m = 0.17392900503352984;
constexpr double kFlatFieldPower = 9.566095276844141e-06;  // I0 * area
constexpr double kSteerMoveAt4Deg2m = 0.13985362388702083;  // 2 * tan(4 deg)

}  // namespace

TEST_CASE("beam radius matches the Gaussian closed form") {
    CHECK(kBeam.rayleigh_range_m() == doctest::Approx(kRayleighRange).epsilon(1e-12));

    // W(0) = W0 by definition
    CHECK(beam_radius(kBeam, 0.0) == 2e-6);

    CHECK(beam_radius(kBeam, 2.0) == doctest::Approx(kRadiusAt2m).epsilon(1e-12));

    // Rayleigh range: radius grows by sqrt(2)
    CHECK(beam_radius(kBeam, kBeam.rayleigh_range_m()) ==
          doctest::Approx(2e-6 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("beam radius is strictly increasing in distance") {
    double prev = beam_radius(kBeam, 0.0);
    for (double d = 0.05; d <= 3.0; d += 0.05) {
        const double w = beam_radius(kBeam, d);
        CHECK(w > prev);
        prev = w;
    }
}

TEST_CASE("beam radius rejects bad inputs") {
    CHECK_THROWS_AS(beam_radius(kBeam, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(beam_radius(kBeam, std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
    CHECK_THROWS_AS(beam_radius(kBeam, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(beam_radius(BeamParams{0.0, 850e-9, 0.02}, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(beam_radius(BeamParams{2e-6, -1.0, 0.02}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("beam intensity profile") {
    // on-axis value at the 2 m drop
    CHECK(beam_intensity(kBeam, 2.0, 0.0) ==
          doctest::Approx(kOnAxisIntensityAt2m).epsilon(1e-12));

    // Gaussian tail vanishes
    CHECK(beam_intensity(kBeam, 2.0, 10.0) < 1e-300);

    // exponent is exactly -1 at r = W / sqrt(2)
    const double w = beam_radius(kBeam, 2.0);
    CHECK(beam_intensity(kBeam, 2.0, w / std::sqrt(2.0)) ==
          doctest::Approx(kOnAxisIntensityAt2m / M_E).epsilon(1e-12));

    // on-axis intensity strictly decreasing in distance
    double prev = beam_intensity(kBeam, 0.1, 0.0);
    for (double d = 0.2; d <= 3.0; d += 0.1) {
        const double i = beam_intensity(kBeam, d, 0.0);
        CHECK(i < prev);
        prev = i;
    }

    CHECK_THROWS_AS(beam_intensity(kBeam, 2.0, -0.01), std::invalid_argument);
}

TEST_CASE("intensity integrates back to the total power") {
    // midpoint rule over a disc of radius 6 W(d); recovers P within 0.1%
    const double w = beam_radius(kBeam, 2.0);
    const double radius = 6.0 * w;
    const int slices = 100000;
    const double dr = radius / slices;
    double integral = 0.0;
    for (int i = 0; i < slices; ++i) {
        const double r = (i + 0.5) * dr;
        integral += beam_intensity(kBeam, 2.0, r) * 2.0 * M_PI * r * dr;
    }
    CHECK(integral == doctest::Approx(kBeam.total_power_w).epsilon(1e-3));
}

TEST_CASE("detector quadrature approaches the flat-field limit") {
    // detector side (7.4 mm) is far below the 0.27 m spot radius, so the
    // integral should sit within 0.1% of I(0) * area
    const Vec2 center{1.0, 1.0};
    const double quad =
        detector_power_quadrature(kBeam, 2.0, center, kRx.side_m(), center);
    CHECK(quad == doctest::Approx(kFlatFieldPower).epsilon(1e-3));
}

TEST_CASE("received power gates on the field of view") {
    AccessPointPose ap;
    ap.array_id = 1;
    ap.ap_id = 1;
    ap.position = Vec3{3.0, 1.0, 3.0};
    ap.nominal_spot_center = Vec2{3.0, 1.0};

    // user 2 m to the side, 2 m below: incidence 45 degrees > 40 degree FOV
    UserPose far_user{1, Vec3{1.0, 1.0, 1.0}};
    CHECK(received_optical_power(kBeam, ap, ap.nominal_spot_center, far_user, kRx) ==
          0.0);

    // inside the FOV the gate must not attenuate at all: identical to the
    // raw quadrature
    UserPose near_user{1, Vec3{2.4, 1.0, 1.0}};  // incidence ~16.7 degrees
    const double gated =
        received_optical_power(kBeam, ap, ap.nominal_spot_center, near_user, kRx);
    const double raw = detector_power_quadrature(
        kBeam, 2.0, Vec2{2.4, 1.0}, kRx.side_m(), ap.nominal_spot_center);
    CHECK(gated == raw);
    CHECK(gated > 0.0);
}

TEST_CASE("received power at the spot center matches the hand oracle") {
    AccessPointPose ap;
    ap.array_id = 1;
    ap.ap_id = 1;
    ap.position = Vec3{1.0, 1.0, 3.0};
    ap.nominal_spot_center = Vec2{1.0, 1.0};
    UserPose user{1, Vec3{1.0, 1.0, 1.0}};

    const double p =
        received_optical_power(kBeam, ap, ap.nominal_spot_center, user, kRx);
    CHECK(p == doctest::Approx(kFlatFieldPower).epsilon(1e-3));
}

TEST_CASE("received power is non-increasing in the spot offset") {
    AccessPointPose ap;
    ap.array_id = 1;
    ap.ap_id = 1;
    ap.position = Vec3{2.0, 2.0, 3.0};
    ap.nominal_spot_center = Vec2{2.0, 2.0};
    UserPose user{1, Vec3{2.0, 2.0, 1.0}};

    double prev = std::numeric_limits<double>::infinity();
    for (double offset = 0.0; offset <= 0.6; offset += 0.03) {
        const double p = received_optical_power(
            kBeam, ap, Vec2{2.0 + offset, 2.0}, user, kRx);
        CHECK(p <= prev);
        prev = p;
    }
}

TEST_CASE("electrical conversion and thermal noise") {
    CHECK(electrical_signal_power(0.0, kRx) == 0.0);
    CHECK(electrical_signal_power(9.55e-6, kRx) ==
          doctest::Approx(2.6594649e-11).epsilon(1e-9));

    // square law: doubling optical power quadruples electrical power
    const double p1 = electrical_signal_power(3.3e-6, kRx);
    const double p2 = electrical_signal_power(6.6e-6, kRx);
    CHECK(p2 == doctest::Approx(4.0 * p1).epsilon(1e-12));

    CHECK(thermal_noise_power(kRx) == doctest::Approx(9.99045e-14).epsilon(1e-12));

    ReceiverParams doubled = kRx;
    doubled.bandwidth_hz *= 2.0;
    CHECK(thermal_noise_power(doubled) ==
          doctest::Approx(2.0 * thermal_noise_power(kRx)).epsilon(1e-12));

    CHECK_THROWS_AS(electrical_signal_power(-1e-6, kRx), std::invalid_argument);
}

TEST_CASE("steered spot center") {
    AccessPointPose ap;
    ap.array_id = 1;
    ap.ap_id = 1;
    ap.position = Vec3{1.0, 1.0, 3.0};
    ap.nominal_spot_center = Vec2{1.0, 1.0};

    SUBCASE("zero steering budget is the identity") {
        UserPose user{1, Vec3{2.5, 1.7, 1.0}};
        const Vec2 spot = steered_spot_center(ap, user, 0.0);
        CHECK(spot.x == 1.0);
        CHECK(spot.y == 1.0);
    }

    SUBCASE("user at the nominal center needs no steering") {
        UserPose user{1, Vec3{1.0, 1.0, 1.0}};
        const Vec2 spot = steered_spot_center(ap, user, 4.0);
        CHECK(spot.x == 1.0);
        CHECK(spot.y == 1.0);
    }

    SUBCASE("user inside the cone gets the spot exactly") {
        UserPose user{1, Vec3{1.1, 1.05, 1.0}};  // 0.112 m < 0.14 m reach
        const Vec2 spot = steered_spot_center(ap, user, 4.0);
        CHECK(spot.x == 1.1);
        CHECK(spot.y == 1.05);
    }

    SUBCASE("user outside the cone: spot moves 2 tan(4 deg) toward it") {
        UserPose user{1, Vec3{1.5, 1.0, 1.0}};  // 0.5 m from the nominal spot
        const Vec2 spot = steered_spot_center(ap, user, 4.0);
        CHECK(spot.x == doctest::Approx(1.0 + kSteerMoveAt4Deg2m).epsilon(1e-12));
        CHECK(spot.y == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("steering never increases the distance to the user") {
        for (double ux = 1.0; ux <= 3.0; ux += 0.25) {
            for (double deg : {0.0, 1.0, 4.0, 10.0}) {
                UserPose user{1, Vec3{ux, 1.3, 1.0}};
                const Vec2 spot = steered_spot_center(ap, user, deg);
                const Vec2 target{ux, 1.3};
                CHECK(distance(spot, target) <=
                      distance(ap.nominal_spot_center, target) + 1e-15);
            }
        }
    }
}
