#include "swarmtrust/pso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "swarmtrust/errors.hpp"

namespace swarmtrust {

namespace {
constexpr std::pair<GenBestPolicy, std::string_view> kPolicyNames[] = {
    {GenBestPolicy::BinaryRejection, "binary-rejection"},
    {GenBestPolicy::HyperbolicScaling, "hyperbolic"},
    {GenBestPolicy::StochasticFiltering, "stochastic"},
};
}  // namespace

std::string_view policy_name(GenBestPolicy p) {
    for (const auto& [policy, name] : kPolicyNames)
        if (policy == p) return name;
    throw std::logic_error("policy_name: unhandled policy");
}

GenBestPolicy policy_from_name(std::string_view name) {
    for (const auto& [policy, known] : kPolicyNames)
        if (known == name) return policy;
    throw ConfigError("unknown policy '" + std::string(name) + "'");
}

const std::vector<std::string_view>& policy_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto& [policy, name] : kPolicyNames) out.push_back(name);
        return out;
    }();
    return names;
}

Velocity update_velocity(const Velocity& v, const Position& p, const Position& pbest_agent,
                         const Position& pbest_swarm, double c1, double c2, double r1, double r2,
                         double s_max) {
    Velocity out{
        v.vx + c1 * r1 * (pbest_agent.x - p.x) + c2 * r2 * (pbest_swarm.x - p.x),
        v.vy + c1 * r1 * (pbest_agent.y - p.y) + c2 * r2 * (pbest_swarm.y - p.y),
    };
    const double speed = norm(out);
    if (speed > s_max) {
        out.vx *= s_max / speed;
        out.vy *= s_max / speed;
    }
    return out;
}

SwarmBest genbest_binary(std::span<const BestCandidate> candidates, SwarmBest best) {
    for (const auto& c : candidates) {
        if (c.d < best.d_best) {
            best.d_best = c.d;
            best.p_best = c.p;
            best.source = c.id;
        }
    }
    return best;
}

SwarmBest genbest_hyperbolic(std::span<const BestCandidate> candidates, SwarmBest best,
                             double rho_of_source) {
    // +infinity stays +infinity under any positive scaling, so a finite
    // candidate always beats an unset record.
    double incumbent = best.d_best / rho_of_source;
    for (const auto& c : candidates) {
        if (!(c.rho > 0.0))
            throw std::invalid_argument("genbest_hyperbolic: candidate trust must be positive");
        const double scaled = c.d / c.rho;
        if (scaled < incumbent) {
            best.d_best = c.d;
            best.p_best = c.p;
            best.source = c.id;
            incumbent = scaled;
        }
    }
    return best;
}

std::vector<double> stochastic_pmf(std::span<const BestCandidate> candidates) {
    double total = 0.0;
    for (const auto& c : candidates) {
        if (c.rho < 0.0) throw std::invalid_argument("stochastic_pmf: negative trust score");
        total += c.rho;
    }
    if (!(total > 0.0)) throw std::invalid_argument("stochastic_pmf: trust mass is zero");
    std::vector<double> pmf;
    pmf.reserve(candidates.size());
    for (const auto& c : candidates) pmf.push_back(c.rho / total);
    return pmf;
}

SwarmBest genbest_stochastic(std::span<const BestCandidate> candidates, SwarmBest best,
                             Pcg32& rng) {
    if (candidates.empty()) return best;

    std::vector<double> cumulative;
    cumulative.reserve(candidates.size());
    double total = 0.0;
    for (const auto& c : candidates) {
        if (c.rho < 0.0) throw std::invalid_argument("genbest_stochastic: negative trust score");
        total += c.rho;
        cumulative.push_back(total);
    }
    if (!(total > 0.0)) throw std::invalid_argument("genbest_stochastic: trust mass is zero");

    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const double u = rng.uniform01() * total;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto idx = std::min(static_cast<std::size_t>(it - cumulative.begin()),
                                  candidates.size() - 1);
        const auto& c = candidates[idx];
        if (c.d < best.d_best) {
            best.d_best = c.d;
            best.p_best = c.p;
            best.source = c.id;
        }
    }
    return best;
}

RunRngs make_run_rngs(std::uint64_t seed, int agent_count) {
    RunRngs rngs{
        make_stream(seed, Concern::SensingNoise),
        {},
        make_stream(seed, Concern::Detector),
        make_stream(seed, Concern::PsoCoefficients),
        make_stream(seed, Concern::Filtering),
    };
    rngs.attack.reserve(static_cast<std::size_t>(agent_count));
    for (int i = 0; i < agent_count; ++i)
        rngs.attack.push_back(make_stream(seed, Concern::Attack, static_cast<std::uint32_t>(i)));
    return rngs;
}

namespace {

/// Measures one agent's distance and applies the injection hook. Returns the
/// reported distance and whether an injection happened this iteration.
std::pair<double, bool> sense_and_report(const AgentState& agent, const WorldConfig& world,
                                         const AttackSpec& attack, RunRngs& rngs) {
    const double noise_db = rngs.sensing.normal(0.0, std::sqrt(world.noise_power));
    double report = measure_distance(true_distance(agent.position, world.target), noise_db);
    bool attacked = false;
    if (agent.is_attacker && attack.model != AttackModel::None) {
        auto& attack_rng = rngs.attack[static_cast<std::size_t>(agent.id)];
        if (should_attack(attack.rate, attack_rng)) {
            report = inject(attack.model, attack.theta, report, attack_rng);
            attacked = true;
        }
    }
    return {report, attacked};
}

/// Velocity updates for every agent, then the joint position advance.
void velocity_and_advance(std::vector<AgentState>& swarm, const SwarmBest& best,
                          const WorldConfig& world, Pcg32& coefficients) {
    for (auto& agent : swarm) {
        const double r1 = coefficients.uniform01();
        const double r2 = coefficients.uniform01();
        const Position& cognitive = *agent.personal_best.position;
        // If no swarm-best position was ever recorded, fall back to the
        // agent's own personal best so the update stays well-defined.
        const Position& social = best.p_best ? *best.p_best : cognitive;
        agent.velocity = update_velocity(agent.velocity, agent.position, cognitive, social,
                                         world.c1, world.c2, r1, r2, world.s_max);
    }
    for (auto& agent : swarm) {
        agent.position.x += agent.velocity.vx;
        agent.position.y += agent.velocity.vy;
    }
}

}  // namespace

void step_conventional(std::vector<AgentState>& swarm, SwarmBest& best, const WorldConfig& world,
                       const AttackSpec& attack, RunRngs& rngs, const DetectorSpec* detector,
                       const TrustStrategy* strategy) {
    for (auto& agent : swarm) {
        const auto [report, attacked] = sense_and_report(agent, world, attack, rngs);
        if (report < agent.personal_best.distance) {
            agent.personal_best = {report, agent.position};
            if (agent.personal_best.distance < best.d_best)
                best = {report, agent.position, agent.id};
        }
        if (detector != nullptr && strategy != nullptr) {
            const bool zeta = classify(attacked, *detector, rngs.detector);
            agent.trust = update_trust(*strategy, zeta, agent.trust);
            agent.flagged = classify_attacker(agent.trust, strategy->rho_th);
        }
    }
    velocity_and_advance(swarm, best, world, rngs.coefficients);
}

void step_trust_aware(std::vector<AgentState>& swarm, SwarmBest& best, const WorldConfig& world,
                      const AttackSpec& attack, const DetectorSpec& detector,
                      const TrustStrategy& strategy, GenBestPolicy policy, RunRngs& rngs) {
    std::vector<BestCandidate> trustworthy;
    trustworthy.reserve(swarm.size());
    for (auto& agent : swarm) {
        const auto [report, attacked] = sense_and_report(agent, world, attack, rngs);
        if (report < agent.personal_best.distance) agent.personal_best = {report, agent.position};
        const bool zeta = classify(attacked, detector, rngs.detector);
        agent.trust = update_trust(strategy, zeta, agent.trust);
        agent.flagged = classify_attacker(agent.trust, strategy.rho_th);
        if (!agent.flagged) trustworthy.push_back({report, agent.position, agent.trust, agent.id});
    }

    // Reject the swarm-best record when its source is currently flagged. The
    // last recorded position is kept for the velocity update fallback.
    if (swarm[static_cast<std::size_t>(best.source)].flagged)
        best.d_best = std::numeric_limits<double>::infinity();

    switch (policy) {
        case GenBestPolicy::BinaryRejection:
            best = genbest_binary(trustworthy, best);
            break;
        case GenBestPolicy::HyperbolicScaling:
            best = genbest_hyperbolic(trustworthy, best,
                                      swarm[static_cast<std::size_t>(best.source)].trust);
            break;
        case GenBestPolicy::StochasticFiltering:
            if (!trustworthy.empty()) best = genbest_stochastic(trustworthy, best, rngs.filtering);
            break;
    }

    velocity_and_advance(swarm, best, world, rngs.coefficients);
}

}  // namespace swarmtrust
