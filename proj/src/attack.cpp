#include "swarmtrust/attack.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "swarmtrust/errors.hpp"

namespace swarmtrust {

namespace {
constexpr std::pair<AttackModel, std::string_view> kModelNames[] = {
    {AttackModel::None, "none"},
    {AttackModel::RandomDistance, "random-distance"},
    {AttackModel::BiasedDistance, "biased-distance"},
    {AttackModel::ExtraDistanceError, "extra-distance-error"},
    {AttackModel::ZeroDistance, "zero-distance"},
};
}  // namespace

std::string_view attack_model_name(AttackModel m) {
    for (const auto& [model, name] : kModelNames)
        if (model == m) return name;
    throw std::logic_error("attack_model_name: unhandled model");
}

AttackModel attack_model_from_name(std::string_view name) {
    for (const auto& [model, known] : kModelNames)
        if (known == name) return model;
    throw ConfigError("unknown attack model '" + std::string(name) + "'");
}

const std::vector<std::string_view>& attack_model_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto& [model, name] : kModelNames) out.push_back(name);
        return out;
    }();
    return names;
}

void validate(const AttackSpec& spec) {
    if (!(spec.rate > 0.0 && spec.rate <= 1.0))
        throw std::invalid_argument("attack_rate must be in (0, 1]");
    if (!(spec.theta > 0.0)) throw std::invalid_argument("attack_theta must be positive");
    if (spec.attacker_count_min < 0)
        throw std::invalid_argument("attacker_count_min must be non-negative");
    if (spec.attacker_count_max < spec.attacker_count_min)
        throw std::invalid_argument("attacker_count_max must be at least attacker_count_min");
}

std::vector<int> select_attackers(int agent_count, const AttackSpec& spec, Pcg32& rng) {
    validate(spec);
    if (spec.attacker_count_max > agent_count)
        throw std::invalid_argument("attacker_count_max exceeds agent_count");

    const int count = rng.uniform_int(spec.attacker_count_min, spec.attacker_count_max);
    std::vector<int> pool(static_cast<std::size_t>(agent_count));
    std::iota(pool.begin(), pool.end(), 0);
    // Partial Fisher-Yates: the first `count` slots end up uniform without
    // replacement.
    for (int j = 0; j < count; ++j)
        std::swap(pool[static_cast<std::size_t>(j)],
                  pool[static_cast<std::size_t>(rng.uniform_int(j, agent_count - 1))]);
    pool.resize(static_cast<std::size_t>(count));
    std::sort(pool.begin(), pool.end());
    return pool;
}

bool should_attack(double rate, Pcg32& rng) {
    if (!(rate > 0.0 && rate <= 1.0)) throw std::invalid_argument("attack rate must be in (0, 1]");
    return rng.bernoulli(rate);
}

double biased_distance(double d_raw, double delta) { return std::max(0.0, d_raw + delta); }

double extra_error_distance(double d_raw, double error_db) {
    return d_raw / std::pow(10.0, error_db / 10.0);
}

double inject(AttackModel model, double theta, double d_raw, Pcg32& rng) {
    if (d_raw < 0.0) throw std::invalid_argument("inject: d_raw must be non-negative");
    if (!(theta > 0.0)) throw std::invalid_argument("inject: theta must be positive");
    switch (model) {
        case AttackModel::RandomDistance:
            return rng.uniform(0.0, 1.0 / theta);
        case AttackModel::BiasedDistance:
            return biased_distance(d_raw, rng.uniform(-10.0 * theta, 0.0));
        case AttackModel::ExtraDistanceError:
            return extra_error_distance(d_raw, rng.normal(0.0, std::sqrt(theta)));
        case AttackModel::ZeroDistance:
            return 0.0;
        case AttackModel::None:
            break;
    }
    throw std::logic_error("inject: model 'none' never injects");
}

}  // namespace swarmtrust
