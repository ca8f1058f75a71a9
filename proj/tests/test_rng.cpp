#include <doctest.h>

#include <cmath>

#include "swarmtrust/rng.hpp"

using namespace swarmtrust;

TEST_CASE("mix64 avalanches and is stable") {
    CHECK(mix64(0) != 0);
    CHECK(mix64(1) != mix64(2));
    // frozen value so accidental changes to the mixing chain are caught
    CHECK(mix64(42) == 0xbdd732262feb6e95ULL);
}

TEST_CASE("run seeds differ per run and per master seed") {
    CHECK(run_seed(1, 0) != run_seed(1, 1));
    CHECK(run_seed(1, 0) != run_seed(2, 0));
    CHECK(run_seed(7, 3) == run_seed(7, 3));
}

TEST_CASE("pcg32 streams are deterministic and independent per id") {
    Pcg32 a = make_stream(123, Concern::SensingNoise);
    Pcg32 b = make_stream(123, Concern::SensingNoise);
    Pcg32 c = make_stream(123, Concern::Detector);
    bool all_equal = true, any_equal_to_c = false;
    for (int i = 0; i < 64; ++i) {
        const auto va = a.next_u32();
        const auto vb = b.next_u32();
        const auto vc = c.next_u32();
        all_equal = all_equal && (va == vb);
        any_equal_to_c = any_equal_to_c || (va == vc);
    }
    CHECK(all_equal);
    CHECK_FALSE(any_equal_to_c);  // 64 collisions in a row would be astronomical
}

TEST_CASE("uniform01 stays in [0,1) and bernoulli respects endpoints") {
    Pcg32 rng(1, 2);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    Pcg32 rng2(3, 4);
    for (int i = 0; i < 1000; ++i) CHECK(rng2.bernoulli(1.0));
    for (int i = 0; i < 1000; ++i) CHECK_FALSE(rng2.bernoulli(0.0));
}

TEST_CASE("uniform_int covers the range uniformly") {
    Pcg32 rng(5, 6);
    int counts[4] = {0, 0, 0, 0};
    const int draws = 40000;
    for (int i = 0; i < draws; ++i) {
        const int v = rng.uniform_int(2, 5);
        REQUIRE(v >= 2);
        REQUIRE(v <= 5);
        ++counts[v - 2];
    }
    for (const int c : counts) CHECK(std::abs(c / double(draws) - 0.25) < 0.02);
    CHECK(rng.uniform_int(7, 7) == 7);
    CHECK_THROWS_AS(rng.uniform_int(3, 2), std::invalid_argument);
}

TEST_CASE("normal sampler matches its first two moments") {
    Pcg32 rng(11, 12);
    const int n = 100000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal(0.0, 1.0);
        sum += z;
        sum_sq += z * z;
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    CHECK(std::abs(mean) < 0.02);
    CHECK(std::abs(var - 1.0) < 0.05);
}
