#include "swarmtrust/swarm_model.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmtrust {

void validate(const WorldConfig& cfg) {
    if (!(cfg.region_width > 0.0)) throw std::invalid_argument("region_width must be positive");
    if (!(cfg.region_height > 0.0)) throw std::invalid_argument("region_height must be positive");
    if (!is_finite(cfg.target)) throw std::invalid_argument("target must be finite");
    if (!(cfg.noise_power >= 0.0)) throw std::invalid_argument("noise_power must be non-negative");
    if (!(cfg.s_max > 0.0)) throw std::invalid_argument("s_max must be positive");
    if (!std::isfinite(cfg.c1) || !std::isfinite(cfg.c2))
        throw std::invalid_argument("c1 and c2 must be finite");
    if (cfg.horizon < 1) throw std::invalid_argument("horizon must be at least 1");
    if (cfg.agent_count < 1) throw std::invalid_argument("agent_count must be at least 1");
}

double true_distance(const Position& p, const Position& target) { return distance(p, target); }

double measure_distance(double true_dist, double noise_db) {
    if (true_dist < 0.0) throw std::invalid_argument("measure_distance: distance must be non-negative");
    return true_dist * std::pow(10.0, noise_db / 10.0);
}

std::vector<AgentState> init_swarm(const WorldConfig& cfg, Pcg32& rng) {
    validate(cfg);
    std::vector<AgentState> swarm(static_cast<std::size_t>(cfg.agent_count));
    for (int i = 0; i < cfg.agent_count; ++i) {
        auto& agent = swarm[static_cast<std::size_t>(i)];
        agent.id = i;
        agent.position.x = rng.uniform(0.0, cfg.region_width);
        agent.position.y = rng.uniform(0.0, cfg.region_height);
    }
    return swarm;
}

}  // namespace swarmtrust
