#include <doctest.h>

#include <cmath>

#include "swarmtrust/errors.hpp"
#include "swarmtrust/rng.hpp"
#include "swarmtrust/trust.hpp"

using namespace swarmtrust;

TEST_CASE("reward rules") {
    CHECK(reward(UpdateMode::Linear, 0.5) == doctest::Approx(0.55));
    CHECK(reward(UpdateMode::Exponential, 0.6) == 1.0);
    CHECK(reward(UpdateMode::Binary, 0.01) == 1.0);
    CHECK(reward(UpdateMode::Linear, 0.98) == 1.0);
    CHECK(reward(UpdateMode::Exponential, 0.0) == 0.0);  // absorbing state at zero
    CHECK_THROWS_AS(reward(UpdateMode::Linear, 1.2), std::invalid_argument);
}

TEST_CASE("penalty rules") {
    CHECK(penalize(UpdateMode::Exponential, 0.5) == doctest::Approx(0.25));
    CHECK(penalize(UpdateMode::Linear, 0.02) == 0.0);
    CHECK(penalize(UpdateMode::Binary, 0.99) == 0.0);
    CHECK_THROWS_AS(penalize(UpdateMode::Binary, -0.1), std::invalid_argument);
}

TEST_CASE("update_trust dispatches on the detector verdict") {
    const auto strategy = strategy_preset("linear-exp");
    CHECK(update_trust(strategy, true, 0.5) == doctest::Approx(0.25));
    CHECK(update_trust(strategy, false, 0.5) == doctest::Approx(0.55));
}

TEST_CASE("binary-binary alternation is memoryless") {
    const auto strategy = strategy_preset("binary-binary");
    double rho = 0.5;
    const double expected[] = {1.0, 0.0, 1.0, 0.0};
    bool zeta = false;
    for (const double e : expected) {
        rho = update_trust(strategy, zeta, rho);
        CHECK(rho == e);
        zeta = !zeta;
    }
}

TEST_CASE("threshold classifier is strict") {
    CHECK(classify_attacker(0.381, 0.382));
    CHECK_FALSE(classify_attacker(0.382, 0.382));
    CHECK_FALSE(classify_attacker(1.0, 0.382));
    CHECK_FALSE(classify_attacker(1.0, 1.0));
}

TEST_CASE("update rules are bounded and ordered around rho") {
    const UpdateMode modes[] = {UpdateMode::Binary, UpdateMode::Linear, UpdateMode::Exponential};
    Pcg32 rng(31, 7);
    for (int i = 0; i < 2000; ++i) {
        const double rho = rng.uniform01();
        for (const auto mode : modes) {
            const double up = reward(mode, rho);
            const double down = penalize(mode, rho);
            CHECK(down <= rho);
            CHECK(rho <= up);
            CHECK(up <= 1.0);
            CHECK(down >= 0.0);
        }
    }
}

TEST_CASE("update rules are monotone in rho") {
    const UpdateMode modes[] = {UpdateMode::Binary, UpdateMode::Linear, UpdateMode::Exponential};
    Pcg32 rng(32, 8);
    for (int i = 0; i < 2000; ++i) {
        double a = rng.uniform01();
        double b = rng.uniform01();
        if (a > b) std::swap(a, b);
        for (const auto mode : modes) {
            CHECK(reward(mode, a) <= reward(mode, b));
            CHECK(penalize(mode, a) <= penalize(mode, b));
        }
    }
}

TEST_CASE("binary-binary flag equals the instantaneous detector verdict") {
    const auto base = strategy_preset("binary-binary");
    Pcg32 rng(33, 9);
    for (int trial = 0; trial < 200; ++trial) {
        TrustStrategy strategy = base;
        strategy.rho_th = rng.uniform(0.01, 0.99);
        double rho = strategy.rho_init;
        for (int t = 0; t < 20; ++t) {
            const bool zeta = rng.bernoulli(0.3);
            rho = update_trust(strategy, zeta, rho);
            CHECK(classify_attacker(rho, strategy.rho_th) == zeta);
        }
    }
}

TEST_CASE("exponential penalty never reaches zero from a positive score") {
    double rho = 0.7;
    for (int i = 0; i < 200; ++i) {
        rho = penalize(UpdateMode::Exponential, rho);
        CHECK(rho > 0.0);
    }
}

TEST_CASE("presets") {
    CHECK(strategy_preset_names().size() == 5);
    for (const auto name : strategy_preset_names()) {
        const auto strategy = strategy_preset(name);
        CHECK(strategy_name(strategy) == std::string(name));
        CHECK(strategy.rho_init == 0.5);
        CHECK(strategy.rho_th == 0.382);
        CHECK(strategy.linear_step == 0.05);
    }
    const auto mixed = strategy_preset("exp-linear");
    CHECK(mixed.reward_mode == UpdateMode::Exponential);
    CHECK(mixed.penalty_mode == UpdateMode::Linear);
    CHECK_THROWS_AS(strategy_preset("exp-binary"), ConfigError);
}

TEST_CASE("strategy validation") {
    TrustStrategy s;
    s.rho_init = 1.5;
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
    s = TrustStrategy{};
    s.linear_step = 0.0;
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
}
