#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace swarmtrust {

/// SplitMix64 finalizer. Used to derive run seeds and stream seeds from a
/// master seed with full avalanche, so that nearby seeds give unrelated
/// streams.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed of Monte-Carlo run `run_index` under `master_seed`. Pure, so any run
/// is reproducible in isolation without executing the runs before it.
constexpr std::uint64_t run_seed(std::uint64_t master_seed, std::uint64_t run_index) noexcept {
    return mix64(mix64(master_seed) + run_index);
}

/// Minimal PCG32 engine (O'Neill's pcg32). Self-contained so that sequences
/// are bit-identical across platforms and standard libraries, which the
/// determinism contract requires; std::<random> distributions are not
/// portable that way.
class Pcg32 {
public:
    Pcg32() : Pcg32(0x853C49E6748FEA9BULL, 0xDA3E39CB94B95BDBULL) {}

    Pcg32(std::uint64_t seed, std::uint64_t stream) {
        state_ = 0u;
        inc_ = (stream << 1u) | 1u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    /// Uniform double in [0, 1).
    double uniform01() { return next_u32() * 0x1.0p-32; }

    /// Uniform double in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// True with probability p.
    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform integer in [lo, hi], both inclusive. Unbiased via rejection.
    int uniform_int(int lo, int hi) {
        if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
        const auto bound = static_cast<std::uint32_t>(hi - lo) + 1u;
        const std::uint32_t threshold = (0u - bound) % bound;
        for (;;) {
            const std::uint32_t r = next_u32();
            if (r >= threshold) return lo + static_cast<int>(r % bound);
        }
    }

    /// Gaussian sample via Box-Muller. Exactly two engine draws per call.
    double normal(double mean, double stddev) {
        const double u1 = (static_cast<double>(next_u32()) + 1.0) * 0x1.0p-32;  // (0, 1]
        const double u2 = uniform01();                                          // [0, 1)
        const double radius = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

/// Per-run RNG concerns. Each concern owns an independent substream, so
/// toggling one concern (say, enabling attacks) never shifts the draws seen
/// by another (say, honest sensing noise).
enum class Concern : std::uint32_t {
    Placement = 1,
    SensingNoise = 2,
    AttackerSelect = 3,
    Attack = 4,  // one substream per agent: sub = agent index
    Detector = 5,
    PsoCoefficients = 6,
    Filtering = 7,
};

inline Pcg32 make_stream(std::uint64_t seed, Concern concern, std::uint32_t sub = 0) {
    const std::uint64_t id = (static_cast<std::uint64_t>(concern) << 32) | sub;
    return Pcg32(mix64(seed ^ mix64(id)), id);
}

}  // namespace swarmtrust
