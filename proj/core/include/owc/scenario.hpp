#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "owc/geometry.hpp"
#include "owc/qlearning.hpp"

namespace owc {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArrayPlacement {
    Vec3 position;           // on the ceiling
    double ap_pitch_m = 0.1; // side of the 2x2 AP grid around the array center
};

struct BeamConfig {
    double waist_w0_m = 2e-6;
    double wavelength_m = 850e-9;
    double power_per_vcsel_w = 5e-3;
    int vcsels_per_ap = 4;  // co-located emitters aggregated into one beam
};

struct SteeringConfig {
    bool enabled = true;
    double max_deg = 4.0;
};

/// Full simulation description: room, transmitters, receivers, thresholds,
/// and training hyperparameters.
struct ScenarioConfig {
    std::string name = "custom";
    RoomGeometry room;
    std::vector<ArrayPlacement> arrays;
    BeamConfig beam;
    ReceiverParams receiver;
    std::vector<Vec3> users;  // user k = index k-1, on the receiving plane
    SteeringConfig steering;
    double threshold_db = kDefaultSinrThresholdDb;
    bool slot_isolation = false;
    Hyperparams ql;

    void validate() const;  // throws ConfigError with the offending key path
};

/// Table-driven presets compiled in so standard runs need no config file.
ScenarioConfig scenario1_preset();
ScenarioConfig scenario2_preset();
std::optional<ScenarioConfig> preset_by_name(const std::string& name);

/// Strict JSON loader: unknown or missing keys fail with their key path.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config_text(const std::string& json_text,
                                 const std::string& source_name = "<inline>");

/// Expands the config into an evaluation scene: aggregates per-AP beam
/// power, lays out each array's four APs on a 2x2 grid of the configured
/// pitch, beams pointing straight down.
Scene build_scene(const ScenarioConfig& config);

}  // namespace owc
