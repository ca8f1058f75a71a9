#include "swarmtrust/config.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace swarmtrust {

namespace {

using nlohmann::json;

double as_double(const std::string& key, const json& value) {
    if (!value.is_number()) throw ConfigError("key '" + key + "': expected a number");
    return value.get<double>();
}

int as_int(const std::string& key, const json& value) {
    if (!value.is_number_integer()) throw ConfigError("key '" + key + "': expected an integer");
    return value.get<int>();
}

std::uint64_t as_seed(const std::string& key, const json& value) {
    if (value.is_number_unsigned()) return value.get<std::uint64_t>();
    if (value.is_number_integer() && value.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(value.get<std::int64_t>());
    throw ConfigError("key '" + key + "': expected a non-negative integer");
}

std::string as_string(const std::string& key, const json& value) {
    if (!value.is_string()) throw ConfigError("key '" + key + "': expected a string");
    return value.get<std::string>();
}

}  // namespace

Scenario scenario_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");

    Scenario s;
    std::optional<std::string> strategy_preset_name;
    std::optional<double> rho_init, rho_th, linear_step;

    for (const auto& [key, value] : doc.items()) {
        if (key == "name") s.name = as_string(key, value);
        else if (key == "engine") s.engine = engine_from_name(as_string(key, value));
        else if (key == "runs") s.runs = as_int(key, value);
        else if (key == "master_seed") s.master_seed = as_seed(key, value);
        else if (key == "region_width") s.world.region_width = as_double(key, value);
        else if (key == "region_height") s.world.region_height = as_double(key, value);
        else if (key == "noise_power") s.world.noise_power = as_double(key, value);
        else if (key == "s_max") s.world.s_max = as_double(key, value);
        else if (key == "c1") s.world.c1 = as_double(key, value);
        else if (key == "c2") s.world.c2 = as_double(key, value);
        else if (key == "horizon") s.world.horizon = as_int(key, value);
        else if (key == "agent_count") s.world.agent_count = as_int(key, value);
        else if (key == "attack_model") s.attack.model = attack_model_from_name(as_string(key, value));
        else if (key == "attack_rate") s.attack.rate = as_double(key, value);
        else if (key == "attack_theta") s.attack.theta = as_double(key, value);
        else if (key == "attacker_count_min") s.attack.attacker_count_min = as_int(key, value);
        else if (key == "attacker_count_max") s.attack.attacker_count_max = as_int(key, value);
        else if (key == "p_md") s.detector.p_md = as_double(key, value);
        else if (key == "p_fa") s.detector.p_fa = as_double(key, value);
        else if (key == "strategy") strategy_preset_name = as_string(key, value);
        else if (key == "rho_init") rho_init = as_double(key, value);
        else if (key == "rho_th") rho_th = as_double(key, value);
        else if (key == "linear_step") linear_step = as_double(key, value);
        else if (key == "policy") s.policy = policy_from_name(as_string(key, value));
        else throw ConfigError("unknown key '" + key + "'");
    }

    if (strategy_preset_name) s.strategy = strategy_preset(*strategy_preset_name);
    if (rho_init) s.strategy.rho_init = *rho_init;
    if (rho_th) s.strategy.rho_th = *rho_th;
    if (linear_step) s.strategy.linear_step = *linear_step;

    // The target is pinned to the region center and is not a config key.
    s.world.target = {s.world.region_width / 2.0, s.world.region_height / 2.0};

    validate(s);
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << is.rdbuf();
    try {
        return scenario_from_json_text(buffer.str());
    } catch (const ConfigError& e) {
        throw ConfigError("config '" + path.string() + "': " + e.what());
    }
}

std::string scenario_to_json_text(const Scenario& s) {
    json doc;
    doc["name"] = s.name;
    doc["engine"] = std::string(engine_name(s.engine));
    doc["runs"] = s.runs;
    doc["master_seed"] = s.master_seed;
    doc["region_width"] = s.world.region_width;
    doc["region_height"] = s.world.region_height;
    doc["noise_power"] = s.world.noise_power;
    doc["s_max"] = s.world.s_max;
    doc["c1"] = s.world.c1;
    doc["c2"] = s.world.c2;
    doc["horizon"] = s.world.horizon;
    doc["agent_count"] = s.world.agent_count;
    doc["attack_model"] = std::string(attack_model_name(s.attack.model));
    doc["attack_rate"] = s.attack.rate;
    doc["attack_theta"] = s.attack.theta;
    doc["attacker_count_min"] = s.attack.attacker_count_min;
    doc["attacker_count_max"] = s.attack.attacker_count_max;
    doc["p_md"] = s.detector.p_md;
    doc["p_fa"] = s.detector.p_fa;
    doc["strategy"] = strategy_name(s.strategy);
    doc["rho_init"] = s.strategy.rho_init;
    doc["rho_th"] = s.strategy.rho_th;
    doc["linear_step"] = s.strategy.linear_step;
    doc["policy"] = std::string(policy_name(s.policy));
    return doc.dump(2) + "\n";
}

}  // namespace swarmtrust
