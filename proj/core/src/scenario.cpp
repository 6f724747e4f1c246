#include "owc/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace owc {

namespace {

using nlohmann::json;

/// Strict-schema accessor: every key must be consumed exactly once, and
/// leftovers are reported with their full path.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
    }

    const json& required(const std::string& key) {
        if (!j_.contains(key)) {
            throw ConfigError(path_ + "." + key + ": missing required key");
        }
        consumed_.insert(key);
        return j_.at(key);
    }

    const json* optional(const std::string& key) {
        if (!j_.contains(key)) return nullptr;
        consumed_.insert(key);
        return &j_.at(key);
    }

    void finish() {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!consumed_.count(it.key())) {
                throw ConfigError(path_ + "." + it.key() + ": unknown key");
            }
        }
    }

    std::string child_path(const std::string& key) const { return path_ + "." + key; }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> consumed_;
};

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path + ": expected a number");
    return j.get<double>();
}

bool as_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) throw ConfigError(path + ": expected a boolean");
    return j.get<bool>();
}

std::uint64_t as_uint(const json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw ConfigError(path + ": expected a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

Vec3 as_vec3(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3) {
        throw ConfigError(path + ": expected [x, y, z]");
    }
    return Vec3{as_number(j[0], path + "[0]"), as_number(j[1], path + "[1]"),
                as_number(j[2], path + "[2]")};
}

RoomGeometry parse_room(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    RoomGeometry room;
    room.width_m = as_number(r.required("width_m"), r.child_path("width_m"));
    room.length_m = as_number(r.required("length_m"), r.child_path("length_m"));
    room.height_m = as_number(r.required("height_m"), r.child_path("height_m"));
    room.rx_plane_height_m =
        as_number(r.required("rx_plane_height_m"), r.child_path("rx_plane_height_m"));
    r.finish();
    return room;
}

BeamConfig parse_beam(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    BeamConfig beam;
    beam.waist_w0_m = as_number(r.required("waist_w0_m"), r.child_path("waist_w0_m"));
    beam.wavelength_m =
        as_number(r.required("wavelength_m"), r.child_path("wavelength_m"));
    beam.power_per_vcsel_w = as_number(r.required("power_per_vcsel_w"),
                                       r.child_path("power_per_vcsel_w"));
    if (const json* v = r.optional("vcsels_per_ap")) {
        beam.vcsels_per_ap =
            static_cast<int>(as_uint(*v, r.child_path("vcsels_per_ap")));
    }
    r.finish();
    return beam;
}

ReceiverParams parse_receiver(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    ReceiverParams rx;
    rx.fov_half_angle_deg = as_number(r.required("fov_half_angle_deg"),
                                      r.child_path("fov_half_angle_deg"));
    rx.area_m2 = as_number(r.required("area_m2"), r.child_path("area_m2"));
    rx.responsivity_a_per_w = as_number(r.required("responsivity_a_per_w"),
                                        r.child_path("responsivity_a_per_w"));
    rx.bandwidth_hz = as_number(r.required("bandwidth_hz"), r.child_path("bandwidth_hz"));
    rx.nsd_a_per_sqrthz =
        as_number(r.required("nsd_a_per_sqrthz"), r.child_path("nsd_a_per_sqrthz"));
    r.finish();
    return rx;
}

SteeringConfig parse_steering(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    SteeringConfig s;
    if (const json* v = r.optional("enabled")) {
        s.enabled = as_bool(*v, r.child_path("enabled"));
    }
    if (const json* v = r.optional("max_deg")) {
        s.max_deg = as_number(*v, r.child_path("max_deg"));
    }
    r.finish();
    return s;
}

Hyperparams parse_ql(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    Hyperparams hp;
    if (const json* v = r.optional("alpha")) hp.alpha = as_number(*v, r.child_path("alpha"));
    if (const json* v = r.optional("gamma")) hp.gamma = as_number(*v, r.child_path("gamma"));
    if (const json* v = r.optional("epsilon0")) {
        hp.epsilon0 = as_number(*v, r.child_path("epsilon0"));
    }
    if (const json* v = r.optional("epsilon_min")) {
        hp.epsilon_min = as_number(*v, r.child_path("epsilon_min"));
    }
    if (const json* v = r.optional("epsilon_decay")) {
        hp.epsilon_decay = as_number(*v, r.child_path("epsilon_decay"));
    }
    if (const json* v = r.optional("max_episodes")) {
        hp.max_episodes = as_uint(*v, r.child_path("max_episodes"));
    }
    if (const json* v = r.optional("convergence_tol")) {
        hp.convergence_tol = as_number(*v, r.child_path("convergence_tol"));
    }
    if (const json* v = r.optional("rng_seed")) {
        hp.rng_seed = as_uint(*v, r.child_path("rng_seed"));
    }
    if (const json* v = r.optional("mode")) {
        const std::string mode = v->is_string() ? v->get<std::string>() : "";
        if (mode == "episodic") {
            hp.mode = Hyperparams::Mode::episodic;
        } else if (mode == "continuing") {
            hp.mode = Hyperparams::Mode::continuing;
        } else {
            throw ConfigError(r.child_path("mode") +
                              ": expected \"episodic\" or \"continuing\"");
        }
    }
    r.finish();
    return hp;
}

ScenarioConfig parse_config(const json& j, const std::string& source) {
    ObjectReader r(j, source);
    ScenarioConfig cfg;

    if (const json* v = r.optional("name")) {
        if (!v->is_string()) throw ConfigError(r.child_path("name") + ": expected a string");
        cfg.name = v->get<std::string>();
    }
    cfg.room = parse_room(r.required("room"), r.child_path("room"));

    const json& arrays = r.required("arrays");
    if (!arrays.is_array() || arrays.empty()) {
        throw ConfigError(r.child_path("arrays") + ": expected a non-empty array");
    }
    for (size_t i = 0; i < arrays.size(); ++i) {
        const std::string apath = r.child_path("arrays") + "[" + std::to_string(i) + "]";
        ObjectReader ar(arrays[i], apath);
        ArrayPlacement placement;
        placement.position = as_vec3(ar.required("position"), apath + ".position");
        if (const json* v = ar.optional("ap_pitch_m")) {
            placement.ap_pitch_m = as_number(*v, apath + ".ap_pitch_m");
        }
        ar.finish();
        cfg.arrays.push_back(placement);
    }

    cfg.beam = parse_beam(r.required("beam"), r.child_path("beam"));
    cfg.receiver = parse_receiver(r.required("receiver"), r.child_path("receiver"));

    const json& users = r.required("users");
    if (!users.is_array() || users.empty()) {
        throw ConfigError(r.child_path("users") + ": expected a non-empty array");
    }
    for (size_t i = 0; i < users.size(); ++i) {
        cfg.users.push_back(
            as_vec3(users[i], r.child_path("users") + "[" + std::to_string(i) + "]"));
    }

    if (const json* v = r.optional("steering")) {
        cfg.steering = parse_steering(*v, r.child_path("steering"));
    }
    if (const json* v = r.optional("threshold_db")) {
        cfg.threshold_db = as_number(*v, r.child_path("threshold_db"));
    }
    if (const json* v = r.optional("slot_isolation")) {
        cfg.slot_isolation = as_bool(*v, r.child_path("slot_isolation"));
    }
    if (const json* v = r.optional("ql")) {
        cfg.ql = parse_ql(*v, r.child_path("ql"));
    }
    r.finish();

    cfg.validate();
    return cfg;
}

constexpr int kApsPerArray = 4;  // 2x2 grid per array

}  // namespace

void ScenarioConfig::validate() const {
    const size_t total_aps = arrays.size() * kApsPerArray;
    if (users.size() > total_aps) {
        std::ostringstream msg;
        msg << "users: K <= L*N violated (" << users.size() << " users, "
            << total_aps << " APs)";
        throw ConfigError(msg.str());
    }
    if (beam.vcsels_per_ap < 1) {
        throw ConfigError("beam.vcsels_per_ap: must be at least 1");
    }
    if (!(steering.max_deg >= 0.0)) {
        throw ConfigError("steering.max_deg: must be non-negative");
    }
    try {
        room.validate();
        ql.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    for (size_t i = 0; i < arrays.size(); ++i) {
        if (std::abs(arrays[i].position.z - room.height_m) > 1e-9) {
            throw ConfigError("arrays[" + std::to_string(i) +
                              "].position: array must sit on the ceiling");
        }
        if (!(arrays[i].ap_pitch_m > 0.0)) {
            throw ConfigError("arrays[" + std::to_string(i) +
                              "].ap_pitch_m: must be positive");
        }
    }
    for (size_t i = 0; i < users.size(); ++i) {
        if (std::abs(users[i].z - room.rx_plane_height_m) > 1e-9) {
            throw ConfigError("users[" + std::to_string(i) +
                              "]: z must equal room.rx_plane_height_m");
        }
    }
}

ScenarioConfig scenario1_preset() {
    ScenarioConfig cfg;
    cfg.name = "scenario1";
    cfg.room = RoomGeometry{4.0, 4.0, 3.0, 1.0};
    cfg.arrays = {
        {Vec3{1.0, 1.0, 3.0}, 0.1},
        {Vec3{1.0, 3.0, 3.0}, 0.1},
        {Vec3{3.0, 1.0, 3.0}, 0.1},
        {Vec3{3.0, 3.0, 3.0}, 0.1},
    };
    cfg.beam = BeamConfig{2e-6, 850e-9, 5e-3, 4};
    cfg.receiver = ReceiverParams{40.0, 55e-6, 0.54, 5e9, 4.47e-12};
    cfg.users = {
        Vec3{1.0, 1.0, 1.0},
        Vec3{1.0, 3.0, 1.0},
        Vec3{3.0, 1.0, 1.0},
        Vec3{3.0, 3.0, 1.0},
    };
    cfg.steering = SteeringConfig{true, 4.0};
    return cfg;
}

ScenarioConfig scenario2_preset() {
    ScenarioConfig cfg = scenario1_preset();
    cfg.name = "scenario2";
    cfg.users = {
        Vec3{3.5, 3.5, 1.0},
        Vec3{3.5, 2.5, 1.0},
        Vec3{2.5, 3.5, 1.0},
        Vec3{2.5, 2.5, 1.0},
    };
    return cfg;
}

std::optional<ScenarioConfig> preset_by_name(const std::string& name) {
    if (name == "scenario1") return scenario1_preset();
    if (name == "scenario2") return scenario2_preset();
    return std::nullopt;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

ScenarioConfig parse_config_text(const std::string& json_text,
                                 const std::string& source_name) {
    json parsed;
    try {
        parsed = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(source_name + ": " + e.what());
    }
    return parse_config(parsed, source_name);
}

Scene build_scene(const ScenarioConfig& config) {
    config.validate();

    Scene scene;
    scene.room = config.room;
    scene.beam = BeamParams{config.beam.waist_w0_m, config.beam.wavelength_m,
                            config.beam.power_per_vcsel_w * config.beam.vcsels_per_ap};
    scene.receiver = config.receiver;
    scene.max_steer_deg = config.steering.max_deg;
    scene.threshold_db = config.threshold_db;
    scene.slot_isolation = config.slot_isolation;

    // AP n of an array occupies corner n of the 2x2 grid, enumerated with x
    // varying slowest: (-,-), (-,+), (+,-), (+,+).
    for (size_t l = 0; l < config.arrays.size(); ++l) {
        const ArrayPlacement& placement = config.arrays[l];
        const double half = placement.ap_pitch_m / 2.0;
        const double offsets[4][2] = {
            {-half, -half}, {-half, +half}, {+half, -half}, {+half, +half}};
        for (int n = 0; n < kApsPerArray; ++n) {
            AccessPointPose ap;
            ap.array_id = static_cast<int>(l) + 1;
            ap.ap_id = n + 1;
            ap.position = Vec3{placement.position.x + offsets[n][0],
                               placement.position.y + offsets[n][1],
                               placement.position.z};
            ap.nominal_spot_center = Vec2{ap.position.x, ap.position.y};
            scene.aps.push_back(ap);
        }
    }

    for (size_t k = 0; k < config.users.size(); ++k) {
        UserPose user;
        user.user_id = static_cast<int>(k) + 1;
        user.position = config.users[k];
        scene.users.push_back(user);
    }

    scene.validate();
    return scene;
}

}  // namespace owc
