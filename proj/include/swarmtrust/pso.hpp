#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "swarmtrust/attack.hpp"
#include "swarmtrust/detection.hpp"
#include "swarmtrust/swarm_model.hpp"
#include "swarmtrust/trust.hpp"

namespace swarmtrust {

/// The swarm-global best record. d_best = +infinity marks an unset or
/// invalidated record; p_best keeps the last valid position so velocity
/// updates stay well-defined across an invalidation. source is the agent
/// whose report produced the record.
struct SwarmBest {
    double d_best = std::numeric_limits<double>::infinity();
    std::optional<Position> p_best;
    int source = 0;
};

/// Swarm-best update policies for the trust-aware engine.
enum class GenBestPolicy { BinaryRejection, HyperbolicScaling, StochasticFiltering };

std::string_view policy_name(GenBestPolicy p);
GenBestPolicy policy_from_name(std::string_view name);
const std::vector<std::string_view>& policy_names();

/// One trustworthy agent's current report, offered to GenBest.
struct BestCandidate {
    double d = 0.0;
    Position p;
    double rho = 1.0;
    int id = 0;
};

/// Velocity update with attraction toward the personal and swarm bests,
/// rescaled to norm s_max whenever the result exceeds it. r1 and r2 are
/// scalar coefficients in [0, 1], each applied to both coordinates.
Velocity update_velocity(const Velocity& v, const Position& p, const Position& pbest_agent,
                         const Position& pbest_swarm, double c1, double c2, double r1, double r2,
                         double s_max);

/// GenBest, plain form: sequential scan in candidate order, replacing the
/// record on strictly lower distance.
SwarmBest genbest_binary(std::span<const BestCandidate> candidates, SwarmBest best);

/// GenBest with trust-scaled comparisons: a candidate wins when d/rho is
/// strictly below the incumbent's d_best/rho_of_source. rho_of_source is the
/// CURRENT trust of the stored source agent. Candidate trust must be > 0.
SwarmBest genbest_hyperbolic(std::span<const BestCandidate> candidates, SwarmBest best,
                             double rho_of_source);

/// Selection probabilities for stochastic filtering: proportional to each
/// candidate's trust. Throws if the total trust mass is zero.
std::vector<double> stochastic_pmf(std::span<const BestCandidate> candidates);

/// GenBest with stochastic filtering: draws |candidates| indices i.i.d. from
/// the trust-proportional PMF (with replacement) and scans the drawn multiset
/// with plain distance comparisons. Empty candidates leave the record
/// unchanged.
SwarmBest genbest_stochastic(std::span<const BestCandidate> candidates, SwarmBest best,
                             Pcg32& rng);

/// All RNG substreams one run consumes, one per concern (plus one attack
/// substream per agent so that enabling attacks never perturbs the honest
/// agents' noise sequence).
struct RunRngs {
    Pcg32 sensing;
    std::vector<Pcg32> attack;
    Pcg32 detector;
    Pcg32 coefficients;
    Pcg32 filtering;
};

RunRngs make_run_rngs(std::uint64_t seed, int agent_count);

/// One iteration of the conventional engine: measure (and possibly inject),
/// update personal bests with cascade into the swarm best, then velocity
/// updates and position advance. When detector and strategy are given, runs
/// detection and trust bookkeeping passively (no effect on the dynamics).
void step_conventional(std::vector<AgentState>& swarm, SwarmBest& best, const WorldConfig& world,
                       const AttackSpec& attack, RunRngs& rngs,
                       const DetectorSpec* detector = nullptr,
                       const TrustStrategy* strategy = nullptr);

/// One iteration of the trust-aware engine: measure/inject, personal bests,
/// detector -> trust -> flag per agent; invalidate the swarm best if its
/// source is flagged; GenBest over the trustworthy agents' current reports;
/// velocity updates and position advance.
void step_trust_aware(std::vector<AgentState>& swarm, SwarmBest& best, const WorldConfig& world,
                      const AttackSpec& attack, const DetectorSpec& detector,
                      const TrustStrategy& strategy, GenBestPolicy policy, RunRngs& rngs);

}  // namespace swarmtrust
