#include <doctest.h>

#include <cmath>
#include <vector>

#include "swarmtrust/harness.hpp"
#include "swarmtrust/pso.hpp"

using namespace swarmtrust;

namespace {

std::vector<AgentState> make_run(const WorldConfig& world, const AttackSpec& attack,
                                 std::uint64_t seed, double rho_init) {
    auto placement = make_stream(seed, Concern::Placement);
    auto swarm = init_swarm(world, placement);
    auto selector = make_stream(seed, Concern::AttackerSelect);
    for (int idx : select_attackers(world.agent_count, attack, selector))
        swarm[static_cast<std::size_t>(idx)].is_attacker = true;
    for (auto& agent : swarm) agent.trust = rho_init;
    return swarm;
}

}  // namespace

TEST_CASE("update_velocity fixed point at consensus") {
    const Velocity v = update_velocity({0, 0}, {2, 3}, {2, 3}, {2, 3}, 0.5, 0.5, 0.7, 0.3, 5.0);
    CHECK(v.vx == 0.0);
    CHECK(v.vy == 0.0);
}

TEST_CASE("update_velocity rescales to s_max") {
    const Velocity v = update_velocity({6, 8}, {0, 0}, {0, 0}, {0, 0}, 0.0, 0.0, 1.0, 1.0, 5.0);
    CHECK(v.vx == doctest::Approx(3.0));
    CHECK(v.vy == doctest::Approx(4.0));
}

TEST_CASE("update_velocity direct arithmetic") {
    const Velocity v = update_velocity({0, 0}, {0, 0}, {1, 0}, {0, 1}, 0.5, 0.5, 1.0, 1.0, 5.0);
    CHECK(v.vx == doctest::Approx(0.5));
    CHECK(v.vy == doctest::Approx(0.5));
}

TEST_CASE("update_velocity always respects the speed cap") {
    Pcg32 rng(41, 1);
    for (int i = 0; i < 2000; ++i) {
        const Velocity v{rng.uniform(-20, 20), rng.uniform(-20, 20)};
        const Position p{rng.uniform(-60, 60), rng.uniform(-60, 60)};
        const Position pb{rng.uniform(-60, 60), rng.uniform(-60, 60)};
        const Position gb{rng.uniform(-60, 60), rng.uniform(-60, 60)};
        const double s_max = rng.uniform(0.5, 8.0);
        const Velocity out = update_velocity(v, p, pb, gb, 0.5, 0.5, rng.uniform01(),
                                             rng.uniform01(), s_max);
        CHECK(norm(out) <= s_max * (1.0 + 1e-12));
    }
}

TEST_CASE("genbest_binary scan") {
    const SwarmBest unset;

    SUBCASE("empty candidates leave the record unchanged") {
        const auto out = genbest_binary({}, unset);
        CHECK(std::isinf(out.d_best));
        CHECK_FALSE(out.p_best.has_value());
        CHECK(out.source == 0);
    }

    SUBCASE("finite candidate beats an unset record") {
        const BestCandidate c[] = {{7.0, {1, 2}, 0.9, 4}};
        const auto out = genbest_binary(c, unset);
        CHECK(out.d_best == 7.0);
        CHECK(out.p_best->x == 1.0);
        CHECK(out.source == 4);
    }

    SUBCASE("strict comparison keeps the first of a tie") {
        const BestCandidate c[] = {{5.0, {0, 0}, 0.9, 2}, {5.0, {9, 9}, 0.9, 9}};
        const auto out = genbest_binary(c, unset);
        CHECK(out.source == 2);
    }
}

TEST_CASE("genbest_hyperbolic trust-scaled comparison") {
    SUBCASE("higher trust can beat a closer incumbent") {
        SwarmBest best{10.0, Position{0, 0}, 3};
        const BestCandidate c[] = {{12.0, {5, 5}, 0.9, 7}};
        const auto out = genbest_hyperbolic(c, best, 0.5);  // incumbent scaled: 20 > 13.33
        CHECK(out.d_best == 12.0);
        CHECK(out.source == 7);
    }

    SUBCASE("finite beats infinite") {
        const BestCandidate c[] = {{50.0, {5, 5}, 0.4, 1}};
        const auto out = genbest_hyperbolic(c, SwarmBest{}, 0.5);
        CHECK(out.d_best == 50.0);
        CHECK(out.source == 1);
    }

    SUBCASE("zero candidate trust violates the contract") {
        const BestCandidate c[] = {{5.0, {0, 0}, 0.0, 1}};
        CHECK_THROWS_AS(genbest_hyperbolic(c, SwarmBest{}, 0.5), std::invalid_argument);
    }
}

TEST_CASE("hyperbolic equals binary whenever all trust scores match") {
    Pcg32 rng(42, 2);
    for (int trial = 0; trial < 500; ++trial) {
        const double rho = rng.uniform(0.1, 1.0);
        const int n = rng.uniform_int(0, 8);
        std::vector<BestCandidate> candidates;
        for (int i = 0; i < n; ++i)
            candidates.push_back({rng.uniform(0.0, 30.0),
                                  {rng.uniform(0, 60), rng.uniform(0, 60)},
                                  rho,
                                  rng.uniform_int(0, 99)});
        SwarmBest best;
        if (rng.bernoulli(0.7)) best = {rng.uniform(0.0, 30.0), Position{1, 1}, 5};

        const auto via_binary = genbest_binary(candidates, best);
        const auto via_hyperbolic = genbest_hyperbolic(candidates, best, rho);
        CHECK(via_binary.d_best == via_hyperbolic.d_best);
        CHECK(via_binary.source == via_hyperbolic.source);
        CHECK(via_binary.p_best.has_value() == via_hyperbolic.p_best.has_value());
        if (via_binary.p_best) {
            CHECK(via_binary.p_best->x == via_hyperbolic.p_best->x);
            CHECK(via_binary.p_best->y == via_hyperbolic.p_best->y);
        }
    }
}

TEST_CASE("stochastic filtering PMF") {
    const BestCandidate c[] = {{1.0, {0, 0}, 0.9, 0}, {2.0, {0, 0}, 0.3, 1}};
    const auto pmf = stochastic_pmf(c);
    REQUIRE(pmf.size() == 2);
    CHECK(pmf[0] == doctest::Approx(0.75));
    CHECK(pmf[1] == doctest::Approx(0.25));
    CHECK(pmf[0] + pmf[1] == doctest::Approx(1.0));

    const BestCandidate degenerate[] = {{1.0, {0, 0}, 0.0, 0}};
    CHECK_THROWS_AS(stochastic_pmf(degenerate), std::invalid_argument);
}

TEST_CASE("stochastic filtering draws proportionally to trust") {
    // Candidate 0 carries twice the trust of candidate 1, so the PMF is
    // (2/3, 1/3). With an unset record and two draws per call, the final
    // record lands on the farther candidate only when both draws hit it:
    // P = (1/3)^2 = 1/9 when it is candidate 1, and 1 - (2/3)^2 = 5/9 for the
    // mirrored layout.
    Pcg32 rng(43, 3);
    const int trials = 50000;

    const BestCandidate near_heavy[] = {{10.0, {0, 0}, 0.6, 0}, {20.0, {0, 0}, 0.3, 1}};
    int farther_won = 0;
    for (int i = 0; i < trials; ++i)
        if (genbest_stochastic(near_heavy, SwarmBest{}, rng).source == 1) ++farther_won;
    CHECK(std::abs(farther_won / double(trials) - 1.0 / 9.0) < 0.01);

    const BestCandidate near_light[] = {{20.0, {0, 0}, 0.6, 0}, {10.0, {0, 0}, 0.3, 1}};
    int light_won = 0;
    for (int i = 0; i < trials; ++i)
        if (genbest_stochastic(near_light, SwarmBest{}, rng).source == 1) ++light_won;
    CHECK(std::abs(light_won / double(trials) - 5.0 / 9.0) < 0.01);
}

TEST_CASE("stochastic filtering record updates") {
    SUBCASE("single candidate wins iff strictly closer") {
        const BestCandidate closer[] = {{3.0, {1, 1}, 0.5, 2}};
        Pcg32 rng(44, 4);
        auto out = genbest_stochastic(closer, SwarmBest{5.0, Position{0, 0}, 9}, rng);
        CHECK(out.d_best == 3.0);
        CHECK(out.source == 2);

        const BestCandidate farther[] = {{8.0, {1, 1}, 0.5, 2}};
        out = genbest_stochastic(farther, SwarmBest{5.0, Position{0, 0}, 9}, rng);
        CHECK(out.d_best == 5.0);
        CHECK(out.source == 9);
    }

    SUBCASE("empty candidates leave the record unchanged") {
        Pcg32 rng(45, 5);
        const auto out = genbest_stochastic({}, SwarmBest{5.0, Position{0, 0}, 9}, rng);
        CHECK(out.d_best == 5.0);
    }

    SUBCASE("fixed seed gives identical outcomes") {
        std::vector<BestCandidate> candidates;
        Pcg32 gen(46, 6);
        for (int i = 0; i < 20; ++i)
            candidates.push_back({gen.uniform(0, 30), {0, 0}, gen.uniform(0.4, 1.0), i});
        Pcg32 r1(47, 7), r2(47, 7);
        const auto a = genbest_stochastic(candidates, SwarmBest{}, r1);
        const auto b = genbest_stochastic(candidates, SwarmBest{}, r2);
        CHECK(a.d_best == b.d_best);
        CHECK(a.source == b.source);
    }
}

TEST_CASE("engine invariants hold across iterations") {
    WorldConfig world;
    world.agent_count = 25;
    world.horizon = 30;
    AttackSpec attack;
    attack.model = AttackModel::ZeroDistance;
    attack.rate = 0.5;
    attack.attacker_count_min = 2;
    attack.attacker_count_max = 5;
    const DetectorSpec detector{0.5, 0.05};
    const auto strategy = strategy_preset("linear-exp");

    const auto check_engine = [&](EngineKind engine, GenBestPolicy policy) {
        auto swarm = make_run(world, attack, 555, strategy.rho_init);
        auto rngs = make_run_rngs(555, world.agent_count);
        SwarmBest best;
        std::vector<double> last_pbest(swarm.size(), std::numeric_limits<double>::infinity());
        double last_best = std::numeric_limits<double>::infinity();

        for (int t = 1; t <= world.horizon; ++t) {
            const int source_before = best.source;
            if (engine == EngineKind::Conventional)
                step_conventional(swarm, best, world, attack, rngs, &detector, &strategy);
            else
                step_trust_aware(swarm, best, world, attack, detector, strategy, policy, rngs);

            for (std::size_t i = 0; i < swarm.size(); ++i) {
                CHECK(norm(swarm[i].velocity) <= world.s_max * (1.0 + 1e-12));
                CHECK(swarm[i].personal_best.distance <= last_pbest[i]);
                CHECK(swarm[i].trust >= 0.0);
                CHECK(swarm[i].trust <= 1.0);
                last_pbest[i] = swarm[i].personal_best.distance;
            }
            if (engine == EngineKind::Conventional) {
                CHECK(best.d_best <= last_best);
            } else if (best.d_best > last_best) {
                // the record may only worsen through the rejection branch,
                // which flags the previous source
                CHECK(swarm[static_cast<std::size_t>(source_before)].flagged);
            }
            last_best = best.d_best;
        }
    };

    check_engine(EngineKind::Conventional, GenBestPolicy::BinaryRejection);
    check_engine(EngineKind::TrustAware, GenBestPolicy::BinaryRejection);
    check_engine(EngineKind::TrustAware, GenBestPolicy::HyperbolicScaling);
    check_engine(EngineKind::TrustAware, GenBestPolicy::StochasticFiltering);
}

TEST_CASE("single honest agent at the target locks onto it immediately") {
    WorldConfig world;
    world.agent_count = 1;
    world.noise_power = 0.0;
    world.horizon = 1;
    AttackSpec attack;  // none

    auto swarm = make_run(world, attack, 1234, 0.5);
    swarm[0].position = world.target;
    auto rngs = make_run_rngs(1234, 1);
    SwarmBest best;
    step_conventional(swarm, best, world, attack, rngs);

    CHECK(swarm[0].personal_best.distance == 0.0);
    CHECK(best.d_best == 0.0);
    CHECK(best.p_best->x == world.target.x);
    CHECK(best.p_best->y == world.target.y);
    CHECK(best.source == 0);
}

TEST_CASE("flagged source invalidates the swarm-best record") {
    // Two noiseless, motionless agents; agent 1 sits closer to the target and
    // owns the record after the first step. Forcing its trust to the
    // exponential-reward absorbing state keeps it flagged, so the next step
    // must reject the record and re-source it from agent 0.
    WorldConfig world;
    world.agent_count = 2;
    world.noise_power = 0.0;
    world.c1 = 0.0;
    world.c2 = 0.0;
    world.horizon = 2;
    AttackSpec attack;  // no attackers
    const DetectorSpec detector{0.5, 0.0};
    auto strategy = strategy_preset("exp-exp");

    auto swarm = make_run(world, attack, 77, strategy.rho_init);
    swarm[0].position = {0.0, 30.0};   // 30 m out
    swarm[1].position = {25.0, 30.0};  // 5 m out
    auto rngs = make_run_rngs(77, 2);
    SwarmBest best;

    step_trust_aware(swarm, best, world, attack, detector, strategy, GenBestPolicy::BinaryRejection,
                     rngs);
    CHECK(best.source == 1);
    CHECK(best.d_best == doctest::Approx(5.0));

    swarm[1].trust = 0.0;  // exp reward keeps zero trust at zero
    step_trust_aware(swarm, best, world, attack, detector, strategy, GenBestPolicy::BinaryRejection,
                     rngs);
    CHECK(swarm[1].flagged);
    CHECK(best.source == 0);
    CHECK(best.d_best == doctest::Approx(30.0));  // record worsened via rejection
}

TEST_CASE("all agents flagged leaves the record invalidated and the step well-defined") {
    WorldConfig world;
    world.agent_count = 3;
    world.noise_power = 0.0;
    AttackSpec attack;
    const DetectorSpec always_flag{0.5, 1.0};  // every honest report flagged
    const auto strategy = strategy_preset("binary-binary");

    auto swarm = make_run(world, attack, 88, strategy.rho_init);
    auto rngs = make_run_rngs(88, 3);
    SwarmBest best;
    step_trust_aware(swarm, best, world, attack, always_flag, strategy,
                     GenBestPolicy::StochasticFiltering, rngs);

    CHECK(std::isinf(best.d_best));
    CHECK_FALSE(best.p_best.has_value());
    for (const auto& agent : swarm) {
        CHECK(agent.flagged);
        CHECK(is_finite(agent.velocity));
        CHECK(is_finite(agent.position));
    }
}

TEST_CASE("trust-aware engine with a perfect detector matches the conventional engine") {
    // No attackers and p_md = p_fa = 0: every trajectory statistic must
    // coincide. Binary rejection and hyperbolic scaling reproduce the
    // conventional cascade bit for bit thanks to the per-concern RNG streams;
    // stochastic filtering resamples the trustworthy set, so it is compared
    // statistically in the harness tests.
    WorldConfig world;
    world.agent_count = 40;
    world.horizon = 25;
    AttackSpec attack;  // model none, zero attackers
    const DetectorSpec perfect{0.0, 0.0};
    const auto strategy = strategy_preset("linear-exp");

    for (const auto policy : {GenBestPolicy::BinaryRejection, GenBestPolicy::HyperbolicScaling}) {
        for (const std::uint64_t seed : {11ull, 22ull, 33ull}) {
            auto conventional = make_run(world, attack, seed, strategy.rho_init);
            auto trust_aware = conventional;
            auto rngs_a = make_run_rngs(seed, world.agent_count);
            auto rngs_b = make_run_rngs(seed, world.agent_count);
            SwarmBest best_a, best_b;

            for (int t = 1; t <= world.horizon; ++t) {
                step_conventional(conventional, best_a, world, attack, rngs_a);
                step_trust_aware(trust_aware, best_b, world, attack, perfect, strategy, policy,
                                 rngs_b);
            }
            CHECK(best_a.d_best == best_b.d_best);
            CHECK(best_a.source == best_b.source);
            for (std::size_t i = 0; i < conventional.size(); ++i) {
                CHECK(conventional[i].position.x == trust_aware[i].position.x);
                CHECK(conventional[i].position.y == trust_aware[i].position.y);
                CHECK(conventional[i].velocity.vx == trust_aware[i].velocity.vx);
                CHECK(conventional[i].personal_best.distance ==
                      trust_aware[i].personal_best.distance);
            }
        }
    }
}

TEST_CASE("policy name round trip") {
    for (const auto name : policy_names()) CHECK(policy_name(policy_from_name(name)) == name);
    CHECK_THROWS(policy_from_name("nope"));
}
