#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "swarmtrust/geometry.hpp"
#include "swarmtrust/rng.hpp"

namespace swarmtrust {

/// World geometry, sensing-noise power and PSO coefficients shared by every
/// run of a scenario. The target sits at the region center and is unknown to
/// the agents.
struct WorldConfig {
    double region_width = 60.0;     // m
    double region_height = 60.0;    // m
    Position target{30.0, 30.0};    // fixed at mid-region
    double noise_power = 0.1;       // variance of the dB-scale sensing error
    double s_max = 5.0;             // speed cap, m/round
    double c1 = 0.5;                // personal-best attraction weight
    double c2 = 0.5;                // swarm-best attraction weight
    int horizon = 50;               // rounds per run
    int agent_count = 100;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const WorldConfig& cfg);

/// Lowest distance an agent has ever reported, with where it stood at the
/// time. The position is absent until the first measurement lands.
struct PersonalBest {
    double distance = std::numeric_limits<double>::infinity();
    std::optional<Position> position;
};

struct AgentState {
    int id = 0;
    Position position;
    Velocity velocity;
    PersonalBest personal_best;
    double trust = 1.0;        // assigned by the run setup before stepping
    bool is_attacker = false;  // ground truth, hidden from detection logic
    bool flagged = false;      // threshold-classifier verdict for this agent
};

/// Euclidean agent-to-target distance.
double true_distance(const Position& p, const Position& target);

/// Log-normal sensing model: the true distance scaled by 10^(noise_db / 10).
/// Deterministic in its inputs; the caller draws noise_db from the sensing
/// stream.
double measure_distance(double true_dist, double noise_db);

/// Agents placed uniformly over the region, zero velocity, unset personal
/// bests, unflagged.
std::vector<AgentState> init_swarm(const WorldConfig& cfg, Pcg32& rng);

}  // namespace swarmtrust
