#include "ast/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ast/util/encoding.hpp"

namespace ast::cli {

namespace {

using nlohmann::json;

// Section-scoped accessor that rejects unknown keys and reports dotted paths.
class Section {
public:
    Section(const json& data, std::string path) : data_(data), path_(std::move(path)) {
        if (!data_.is_object()) throw ConfigError(path_ + ": expected an object");
    }

    ~Section() = default;

    void finish() const {
        for (const auto& [key, value] : data_.items()) {
            if (!seen_.count(key)) {
                throw ConfigError(path_ + "." + key + ": unknown field");
            }
        }
    }

    bool has(const std::string& key) const { return data_.contains(key); }

    const json* get(const std::string& key) const {
        seen_.insert(key);
        auto it = data_.find(key);
        return it == data_.end() ? nullptr : &*it;
    }

    double number(const std::string& key, double fallback) const {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_number()) throw ConfigError(field(key) + ": expected a number");
        return v->get<double>();
    }

    // Accepts a number or the strings "inf"/"+inf"/"infinity".
    double number_or_inf(const std::string& key, double fallback) const {
        const json* v = get(key);
        if (!v) return fallback;
        if (v->is_string()) {
            const std::string s = v->get<std::string>();
            if (s == "inf" || s == "+inf" || s == "infinity") {
                return std::numeric_limits<double>::infinity();
            }
            throw ConfigError(field(key) + ": expected a number or \"inf\"");
        }
        if (!v->is_number()) throw ConfigError(field(key) + ": expected a number or \"inf\"");
        return v->get<double>();
    }

    long integer(const std::string& key, long fallback) const {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_number_integer()) throw ConfigError(field(key) + ": expected an integer");
        return v->get<long>();
    }

    std::uint64_t uinteger(const std::string& key, std::uint64_t fallback) const {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<long long>() >= 0)) {
            throw ConfigError(field(key) + ": expected a nonnegative integer");
        }
        return v->get<std::uint64_t>();
    }

    bool boolean(const std::string& key, bool fallback) const {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_boolean()) throw ConfigError(field(key) + ": expected a boolean");
        return v->get<bool>();
    }

    std::string text(const std::string& key, const std::string& fallback) const {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_string()) throw ConfigError(field(key) + ": expected a string");
        return v->get<std::string>();
    }

    std::vector<double> number_array(const std::string& key, std::vector<double> fallback) const {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_array()) throw ConfigError(field(key) + ": expected an array of numbers");
        std::vector<double> out;
        for (const auto& item : *v) {
            if (!item.is_number()) throw ConfigError(field(key) + ": expected an array of numbers");
            out.push_back(item.get<double>());
        }
        return out;
    }

    std::string field(const std::string& key) const { return path_ + "." + key; }
    const std::string& path() const { return path_; }
    const json& raw() const { return data_; }

private:
    const json& data_;
    std::string path_;
    mutable std::set<std::string> seen_;
};

sim::CartpoleParams parse_cartpole(const json& data) {
    Section s(data, "scenario_params");
    sim::CartpoleParams p;
    p.cart_mass = s.number("cart_mass", p.cart_mass);
    p.pole_mass = s.number("pole_mass", p.pole_mass);
    p.pole_half_length = s.number("pole_half_length", p.pole_half_length);
    p.gravity = s.number("gravity", p.gravity);
    p.dt = s.number("dt", p.dt);
    p.x_max = s.number("x_max", p.x_max);
    p.theta_max = s.number("theta_max", p.theta_max);
    auto gains = s.number_array("controller_gains",
                                {p.controller_gains[0], p.controller_gains[1],
                                 p.controller_gains[2], p.controller_gains[3]});
    if (gains.size() != 4) throw ConfigError(s.field("controller_gains") + ": expected 4 entries");
    std::copy(gains.begin(), gains.end(), p.controller_gains.begin());
    p.disturbance_std = s.number("disturbance_std", p.disturbance_std);
    p.horizon = static_cast<int>(s.integer("horizon", p.horizon));
    auto s0 = s.number_array("initial_state", {0.0, 0.0, 0.0, 0.0});
    if (s0.size() != 4) throw ConfigError(s.field("initial_state") + ": expected 4 entries");
    p.initial_state = sim::CartpoleState{s0[0], s0[1], s0[2], s0[3]};
    s.finish();
    try {
        p.validate();
    } catch (const std::invalid_argument& err) {
        throw ConfigError("scenario_params: " + std::string(err.what()));
    }
    return p;
}

sim::CrosswalkParams parse_crosswalk(const json& data) {
    Section s(data, "scenario_params");
    sim::CrosswalkParams p;
    p.idm.desired_speed = s.number("desired_speed", p.idm.desired_speed);
    p.idm.min_gap = s.number("min_gap", p.idm.min_gap);
    p.idm.time_headway = s.number("time_headway", p.idm.time_headway);
    p.idm.max_accel = s.number("max_accel", p.idm.max_accel);
    p.idm.comfortable_decel = s.number("comfortable_decel", p.idm.comfortable_decel);
    p.idm.accel_exponent = s.number("accel_exponent", p.idm.accel_exponent);
    p.vehicle_length = s.number("vehicle_length", p.vehicle_length);
    p.vehicle_width = s.number("vehicle_width", p.vehicle_width);
    p.pedestrian_size = s.number("pedestrian_size", p.pedestrian_size);
    p.road_half_width = s.number("road_half_width", p.road_half_width);
    p.dt = s.number("dt", p.dt);
    p.horizon = static_cast<int>(s.integer("horizon", p.horizon));
    p.accel_std = s.number("accel_std", p.accel_std);
    p.pos_noise_std = s.number("pos_noise_std", p.pos_noise_std);
    p.vel_noise_std = s.number("vel_noise_std", p.vel_noise_std);
    p.vehicle_start_x = s.number("vehicle_start_x", p.vehicle_start_x);
    p.vehicle_start_speed = s.number("vehicle_start_speed", p.vehicle_start_speed);
    p.ped_start_x = s.number("ped_start_x", p.ped_start_x);
    p.ped_start_y = s.number("ped_start_y", p.ped_start_y);
    p.ped_start_vx = s.number("ped_start_vx", p.ped_start_vx);
    p.ped_start_vy = s.number("ped_start_vy", p.ped_start_vy);
    s.finish();
    try {
        p.validate();
    } catch (const std::invalid_argument& err) {
        throw ConfigError("scenario_params: " + std::string(err.what()));
    }
    return p;
}

sim::EncounterParams parse_encounter(const json& data) {
    Section s(data, "scenario_params");
    sim::EncounterParams p;
    if (const json* list = s.get("aircraft")) {
        if (!list->is_array()) throw ConfigError(s.field("aircraft") + ": expected an array");
        p.aircraft.clear();
        int idx = 0;
        for (const auto& item : *list) {
            Section a(item, s.field("aircraft") + "[" + std::to_string(idx) + "]");
            sim::AircraftInit init;
            init.x = a.number("x", 0.0);
            init.y = a.number("y", 0.0);
            init.altitude = a.number("altitude", 0.0);
            init.speed = a.number("speed", 0.0);
            init.heading_deg = a.number("heading_deg", 0.0);
            a.finish();
            p.aircraft.push_back(init);
            ++idx;
        }
    }
    p.dt = s.number("dt", p.dt);
    p.horizon = static_cast<int>(s.integer("horizon", p.horizon));
    p.advisory_lead = s.number("advisory_lead", p.advisory_lead);
    p.advisory_trigger = s.number("advisory_trigger", p.advisory_trigger);
    p.commanded_rate = s.number("commanded_rate", p.commanded_rate);
    p.response_probability = s.number("response_probability", p.response_probability);
    p.noise_step = s.number("noise_step", p.noise_step);
    // The NMAC definition is fixed; changing it requires an explicit flag.
    const bool allow_override = s.boolean("allow_custom_nmac_thresholds", false);
    const bool has_custom = s.has("nmac_vertical_threshold") || s.has("nmac_horizontal_threshold");
    const double vt = s.number("nmac_vertical_threshold", p.nmac_params.vertical_threshold);
    const double ht = s.number("nmac_horizontal_threshold", p.nmac_params.horizontal_threshold);
    if (has_custom && !allow_override) {
        throw ConfigError(s.field("nmac_vertical_threshold") +
                          ": NMAC thresholds are definitional; set "
                          "allow_custom_nmac_thresholds to override");
    }
    p.nmac_params.vertical_threshold = vt;
    p.nmac_params.horizontal_threshold = ht;
    s.finish();
    try {
        p.validate();
    } catch (const std::invalid_argument& err) {
        throw ConfigError("scenario_params: " + std::string(err.what()));
    }
    return p;
}

sim::ChainParams parse_chain(const json& data) {
    Section s(data, "scenario_params");
    sim::ChainParams p;
    auto advances = s.number_array("advances", {0.0, 1.0, 2.0});
    p.advances.clear();
    for (double a : advances) p.advances.push_back(static_cast<int>(a));
    p.probs = s.number_array("probs", p.probs);
    p.start_position = static_cast<int>(s.integer("start_position", p.start_position));
    p.failure_position = static_cast<int>(s.integer("failure_position", p.failure_position));
    p.horizon = static_cast<int>(s.integer("horizon", p.horizon));
    s.finish();
    try {
        p.validate();
    } catch (const std::invalid_argument& err) {
        throw ConfigError("scenario_params: " + std::string(err.what()));
    }
    return p;
}

RewardSpec parse_reward(const json& data) {
    Section s(data, "reward");
    RewardSpec spec;
    spec.alpha = s.number_or_inf("alpha", 0.0);
    spec.beta = s.number("beta", 0.0);
    spec.eta = s.number("eta", 0.0);
    spec.use_terminal_heuristic = s.boolean("use_terminal_heuristic", false);
    spec.use_step_heuristic = s.boolean("use_step_heuristic", false);
    s.finish();
    try {
        spec.validate();
    } catch (const std::invalid_argument& err) {
        throw ConfigError("reward: " + std::string(err.what()));
    }
    return spec;
}

} // namespace

RunConfig parse_run_config(const std::string& text, const std::string& path) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ConfigError(path + ": not valid JSON: " + err.what());
    }

    Section top(root, "config");
    RunConfig config;
    config.config_text = text;
    config.config_hash = to_hex64(fnv1a64(text));

    config.scenario = top.text("scenario", "");
    const json empty = json::object();
    const json* scenario_params = top.get("scenario_params");
    if (!scenario_params) scenario_params = &empty;

    if (config.scenario == "cartpole") {
        config.scenario_params = parse_cartpole(*scenario_params);
    } else if (config.scenario == "crosswalk") {
        config.scenario_params = parse_crosswalk(*scenario_params);
    } else if (config.scenario == "encounter") {
        config.scenario_params = parse_encounter(*scenario_params);
    } else if (config.scenario == "custom-discrete") {
        config.scenario_params = parse_chain(*scenario_params);
    } else {
        throw ConfigError("scenario: unknown scenario \"" + config.scenario +
                          "\" (valid: cartpole, crosswalk, encounter, custom-discrete)");
    }

    const json* reward = top.get("reward");
    if (!reward) throw ConfigError("reward: section is required");
    config.reward = parse_reward(*reward);

    config.solver = top.text("solver", "");
    config.budget = top.integer("budget", 0);
    if (config.budget < 0) throw ConfigError("budget: must be >= 0");
    config.rng_seed = top.uinteger("rng_seed", 0);
    config.output_dir = top.text("output_dir", config.output_dir);

    const json* solver_params = top.get("solver_params");
    if (!solver_params) solver_params = &empty;

    if (config.solver == "mcts") {
        Section s(*solver_params, "solver_params");
        config.mcts.exploration_constant =
            s.number("exploration_constant", config.mcts.exploration_constant);
        config.mcts.widening_k = s.number("widening_k", config.mcts.widening_k);
        config.mcts.widening_alpha = s.number("widening_alpha", config.mcts.widening_alpha);
        config.mcts.max_iterations = s.integer("max_iterations", config.mcts.max_iterations);
        config.mcts.rollout_depth_limit =
            static_cast<int>(s.integer("rollout_depth_limit", config.mcts.rollout_depth_limit));
        s.finish();
        config.mcts.rng_seed = config.rng_seed;
        config.mcts.max_sim_steps = config.budget;
        try {
            config.mcts.validate();
        } catch (const std::invalid_argument& err) {
            throw ConfigError("solver_params: " + std::string(err.what()));
        }
    } else if (config.solver == "cem") {
        if (config.scenario == "encounter" || config.scenario == "custom-discrete") {
            throw ConfigError("solver: cem requires a continuous-action scenario, not \"" +
                              config.scenario + "\"");
        }
        Section s(*solver_params, "solver_params");
        config.cem.population_size =
            static_cast<int>(s.integer("population_size", config.cem.population_size));
        config.cem.elite_fraction = s.number("elite_fraction", config.cem.elite_fraction);
        config.cem.generations = static_cast<int>(s.integer("generations", config.cem.generations));
        if (const json* std_field = s.get("initial_std")) {
            if (std_field->is_number()) {
                config.cem.initial_std = {std_field->get<double>()};
            } else if (std_field->is_array()) {
                config.cem.initial_std.clear();
                for (const auto& item : *std_field) {
                    if (!item.is_number()) {
                        throw ConfigError(s.field("initial_std") + ": expected numbers");
                    }
                    config.cem.initial_std.push_back(item.get<double>());
                }
            } else {
                throw ConfigError(s.field("initial_std") + ": expected a number or array");
            }
        }
        config.cem.std_floor = s.number("std_floor", config.cem.std_floor);
        s.finish();
        config.cem.rng_seed = config.rng_seed;
        config.cem.max_sim_steps = config.budget;
        try {
            config.cem.validate();
        } catch (const std::invalid_argument& err) {
            throw ConfigError("solver_params: " + std::string(err.what()));
        }
    } else if (config.solver == "random") {
        Section s(*solver_params, "solver_params");
        config.random_rollouts = s.integer("rollouts", config.random_rollouts);
        s.finish();
        if (config.random_rollouts < 1) {
            throw ConfigError("solver_params.rollouts: must be >= 1");
        }
    } else if (config.solver == "exhaustive") {
        if (config.scenario != "custom-discrete") {
            throw ConfigError("solver: exhaustive requires a finite action set; only "
                              "\"custom-discrete\" declares one");
        }
        Section s(*solver_params, "solver_params");
        config.exhaustive_max_sequences =
            s.integer("max_sequences", config.exhaustive_max_sequences);
        s.finish();
    } else {
        throw ConfigError("solver: unknown solver \"" + config.solver +
                          "\" (valid: mcts, cem, random, exhaustive)");
    }

    top.finish();
    return config;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str(), path);
}

std::unique_ptr<Simulator> make_simulator(const RunConfig& config) {
    if (const auto* p = std::get_if<sim::CartpoleParams>(&config.scenario_params)) {
        return std::make_unique<sim::CartpoleSimulator>(*p);
    }
    if (const auto* p = std::get_if<sim::CrosswalkParams>(&config.scenario_params)) {
        return std::make_unique<sim::CrosswalkSimulator>(*p);
    }
    if (const auto* p = std::get_if<sim::EncounterParams>(&config.scenario_params)) {
        return sim::make_encounter_simulator(*p);
    }
    const auto& chain = std::get<sim::ChainParams>(config.scenario_params);
    return std::make_unique<sim::ChainSimulator>(chain);
}

} // namespace ast::cli
