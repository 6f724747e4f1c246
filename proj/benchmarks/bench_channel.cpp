#include <benchmark/benchmark.h>

#include "owc/channel.hpp"

using namespace owc;

namespace {

const BeamParams kBeam{2e-6, 850e-9, 0.02};
const ReceiverParams kRx{40.0, 55e-6, 0.54, 5e9, 4.47e-12};

void BM_BeamIntensity(benchmark::State& state) {
    double r = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(beam_intensity(kBeam, 2.0, r));
        r = r < 0.5 ? r + 1e-3 : 0.0;
    }
}
BENCHMARK(BM_BeamIntensity);

void BM_DetectorQuadrature(benchmark::State& state) {
    const int grid_n = static_cast<int>(state.range(0));
    const Vec2 center{1.0, 1.0};
    const Vec2 spot{1.2, 0.9};
    for (auto _ : state) {
        benchmark::DoNotOptimize(detector_power_quadrature(
            kBeam, 2.0, center, kRx.side_m(), spot, grid_n));
    }
}
BENCHMARK(BM_DetectorQuadrature)->Arg(4)->Arg(8)->Arg(16);

void BM_ReceivedOpticalPower(benchmark::State& state) {
    AccessPointPose ap;
    ap.array_id = ap.ap_id = 1;
    ap.position = Vec3{1.0, 1.0, 3.0};
    ap.nominal_spot_center = Vec2{1.0, 1.0};
    const UserPose user{1, Vec3{1.2, 0.9, 1.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            received_optical_power(kBeam, ap, ap.nominal_spot_center, user, kRx));
    }
}
BENCHMARK(BM_ReceivedOpticalPower);

void BM_SteeredSpotCenter(benchmark::State& state) {
    AccessPointPose ap;
    ap.array_id = ap.ap_id = 1;
    ap.position = Vec3{1.0, 1.0, 3.0};
    ap.nominal_spot_center = Vec2{1.0, 1.0};
    const UserPose user{1, Vec3{1.5, 1.7, 1.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(steered_spot_center(ap, user, 4.0));
    }
}
BENCHMARK(BM_SteeredSpotCenter);

}  // namespace

BENCHMARK_MAIN();
