#include "swarmtrust/trust.hpp"

#include <algorithm>
#include <stdexcept>

#include "swarmtrust/errors.hpp"

namespace swarmtrust {

namespace {

void require_unit_interval(double rho, const char* where) {
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument(std::string(where) + ": trust score must be in [0, 1]");
}

}  // namespace

std::string_view update_mode_short_name(UpdateMode m) {
    switch (m) {
        case UpdateMode::Binary: return "binary";
        case UpdateMode::Linear: return "linear";
        case UpdateMode::Exponential: return "exp";
    }
    throw std::logic_error("update_mode_short_name: unhandled mode");
}

void validate(const TrustStrategy& strategy) {
    if (!(strategy.rho_init >= 0.0 && strategy.rho_init <= 1.0))
        throw std::invalid_argument("rho_init must be in [0, 1]");
    if (!(strategy.rho_th >= 0.0 && strategy.rho_th <= 1.0))
        throw std::invalid_argument("rho_th must be in [0, 1]");
    if (!(strategy.linear_step > 0.0 && strategy.linear_step <= 1.0))
        throw std::invalid_argument("linear_step must be in (0, 1]");
}

double reward(UpdateMode mode, double rho, double linear_step) {
    require_unit_interval(rho, "reward");
    switch (mode) {
        case UpdateMode::Binary: return 1.0;
        case UpdateMode::Linear: return std::min(rho + linear_step, 1.0);
        case UpdateMode::Exponential: return std::min(2.0 * rho, 1.0);
    }
    throw std::logic_error("reward: unhandled mode");
}

double penalize(UpdateMode mode, double rho, double linear_step) {
    require_unit_interval(rho, "penalize");
    switch (mode) {
        case UpdateMode::Binary: return 0.0;
        case UpdateMode::Linear: return std::max(rho - linear_step, 0.0);
        case UpdateMode::Exponential: return rho / 2.0;
    }
    throw std::logic_error("penalize: unhandled mode");
}

double update_trust(const TrustStrategy& strategy, bool zeta, double rho) {
    return zeta ? penalize(strategy.penalty_mode, rho, strategy.linear_step)
                : reward(strategy.reward_mode, rho, strategy.linear_step);
}

bool classify_attacker(double rho, double rho_th) { return rho < rho_th; }

namespace {

constexpr std::string_view kPresetNames[] = {
    "binary-binary", "linear-linear", "exp-exp", "exp-linear", "linear-exp",
};

UpdateMode mode_from_short_name(std::string_view name) {
    if (name == "binary") return UpdateMode::Binary;
    if (name == "linear") return UpdateMode::Linear;
    if (name == "exp") return UpdateMode::Exponential;
    throw ConfigError("unknown trust update mode '" + std::string(name) + "'");
}

}  // namespace

TrustStrategy strategy_preset(std::string_view name) {
    for (const auto known : kPresetNames) {
        if (known != name) continue;
        const auto dash = name.find('-');
        TrustStrategy strategy;
        strategy.reward_mode = mode_from_short_name(name.substr(0, dash));
        strategy.penalty_mode = mode_from_short_name(name.substr(dash + 1));
        return strategy;
    }
    throw ConfigError("unknown strategy preset '" + std::string(name) + "'");
}

const std::vector<std::string_view>& strategy_preset_names() {
    static const std::vector<std::string_view> names(std::begin(kPresetNames),
                                                     std::end(kPresetNames));
    return names;
}

std::string strategy_name(const TrustStrategy& strategy) {
    return std::string(update_mode_short_name(strategy.reward_mode)) + "-" +
           std::string(update_mode_short_name(strategy.penalty_mode));
}

}  // namespace swarmtrust
