#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace swarmtrust {

enum class UpdateMode { Binary, Linear, Exponential };

std::string_view update_mode_short_name(UpdateMode m);

/// A trust-regression strategy: one reward mode for reports classified as
/// normal, one penalty mode for reports classified as anomalous, plus the
/// initial score and the attacker-classification threshold.
struct TrustStrategy {
    UpdateMode reward_mode = UpdateMode::Linear;
    UpdateMode penalty_mode = UpdateMode::Exponential;
    double rho_init = 0.5;
    double rho_th = 0.382;
    double linear_step = 0.05;  // fixed in all presets; override only for experiments
};

void validate(const TrustStrategy& strategy);

/// Trust after a report classified as normal. Binary jumps to 1, linear adds
/// the step, exponential doubles; all capped at 1.
double reward(UpdateMode mode, double rho, double linear_step = 0.05);

/// Trust after a report classified as anomalous. Binary drops to 0, linear
/// subtracts the step (floored at 0), exponential halves.
double penalize(UpdateMode mode, double rho, double linear_step = 0.05);

/// Dispatches to reward or penalize depending on the detector verdict zeta.
double update_trust(const TrustStrategy& strategy, bool zeta, double rho);

/// Threshold attacker classifier: flagged iff rho is strictly below rho_th.
bool classify_attacker(double rho, double rho_th);

/// Named presets: binary-binary, linear-linear, exp-exp, exp-linear,
/// linear-exp (reward mode first). Throws ConfigError on unknown names.
TrustStrategy strategy_preset(std::string_view name);
const std::vector<std::string_view>& strategy_preset_names();

/// Canonical "<reward>-<penalty>" name; matches the preset names for the
/// preset combinations.
std::string strategy_name(const TrustStrategy& strategy);

}  // namespace swarmtrust
