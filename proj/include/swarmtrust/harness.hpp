#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swarmtrust/pso.hpp"

namespace swarmtrust {

enum class EngineKind { Conventional, TrustAware };

std::string_view engine_name(EngineKind e);
EngineKind engine_from_name(std::string_view name);
const std::vector<std::string_view>& engine_names();

/// Everything one Monte-Carlo experiment needs: world, threat, detector,
/// trust strategy, swarm-best policy, engine choice, run count and seed.
struct Scenario {
    std::string name = "scenario";
    WorldConfig world;
    AttackSpec attack;
    DetectorSpec detector;
    TrustStrategy strategy;
    GenBestPolicy policy = GenBestPolicy::StochasticFiltering;
    EngineKind engine = EngineKind::Conventional;
    int runs = 1000;
    std::uint64_t master_seed = 42;
};

void validate(const Scenario& scenario);

/// Per-iteration experiment outputs, averaged over runs by run_scenario.
struct IterationMetrics {
    int t = 0;
    double mean_honest_distance = 0.0;
    double r_md = 0.0;  // attacker-detection misdetection rate
    double r_fa = 0.0;  // attacker-detection false-alarm rate
};

/// Arithmetic mean of the true agent-to-target distance over agents outside
/// the attacker set. Throws std::domain_error when every agent is an
/// attacker.
double mean_honest_distance(const std::vector<AgentState>& swarm, const Position& target);

/// Attacker-detection rates from the current flags: r_md is the fraction of
/// attackers currently unflagged (0 with no attackers), r_fa the fraction of
/// non-attackers currently flagged.
std::pair<double, double> detection_rates(const std::vector<AgentState>& swarm);

/// One full simulated run under the given seed. Conventional scenarios run
/// the detector and trust updates passively, so the detection-rate columns
/// are meaningful for them too.
std::vector<IterationMetrics> simulate_run(const Scenario& scenario, std::uint64_t seed);

/// Runs the scenario's Monte-Carlo batch and returns per-iteration metrics
/// averaged over runs. Runs execute concurrently on up to `jobs` threads
/// (0 = hardware concurrency); results are accumulated in run-index order,
/// so the output does not depend on scheduling.
std::vector<IterationMetrics> run_scenario(const Scenario& scenario, int jobs = 0);

enum class Figure { Fig2, Fig3, Fig4 };

Figure figure_from_name(std::string_view name);
const std::vector<std::string_view>& figure_names();

struct ReproduceOptions {
    std::filesystem::path out_dir = "results";
    std::uint64_t base_seed = 42;
    int runs = 1000;
    int jobs = 0;
    bool plot = false;
};

/// Runs the full scenario grid behind one results figure and writes one CSV
/// per scenario (plus one SVG chart per sub-figure when plot is set).
/// Returns the paths written.
std::vector<std::filesystem::path> reproduce(Figure figure, const ReproduceOptions& options);

}  // namespace swarmtrust
