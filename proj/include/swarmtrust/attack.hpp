#pragma once

#include <string_view>
#include <vector>

#include "swarmtrust/rng.hpp"

namespace swarmtrust {

/// Insider data-injection models. None disables injection entirely.
enum class AttackModel {
    None,
    RandomDistance,      // report a uniform draw from [0, 1/theta]
    BiasedDistance,      // subtract a uniform bias from [0, 10*theta], floored at 0
    ExtraDistanceError,  // divide by an extra log-normal error term
    ZeroDistance,        // always report 0
};

std::string_view attack_model_name(AttackModel m);
AttackModel attack_model_from_name(std::string_view name);
const std::vector<std::string_view>& attack_model_names();

struct AttackSpec {
    AttackModel model = AttackModel::None;
    double rate = 0.5;   // per-iteration injection probability, in (0, 1]
    double theta = 1.0;  // scale knob of the injection laws, > 0
    int attacker_count_min = 0;
    int attacker_count_max = 0;
};

void validate(const AttackSpec& spec);

/// Draws the compromised subset for one whole run: cardinality uniform on
/// [attacker_count_min, attacker_count_max], members uniform without
/// replacement. Returns sorted agent indices.
std::vector<int> select_attackers(int agent_count, const AttackSpec& spec, Pcg32& rng);

/// Per-(agent, iteration) decision whether a compromised agent injects now.
bool should_attack(double rate, Pcg32& rng);

/// Deterministic arithmetic behind the biased-distance variant.
double biased_distance(double d_raw, double delta);

/// Deterministic arithmetic behind the extra-error variant.
double extra_error_distance(double d_raw, double error_db);

/// Replaces a raw measurement according to the attack model, drawing the
/// model's internal randomness from rng. Never returns a negative distance.
/// Calling with AttackModel::None is a contract violation.
double inject(AttackModel model, double theta, double d_raw, Pcg32& rng);

}  // namespace swarmtrust
