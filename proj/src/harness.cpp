#include "swarmtrust/harness.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "swarmtrust/csv.hpp"
#include "swarmtrust/errors.hpp"
#include "swarmtrust/svg.hpp"

namespace swarmtrust {

namespace {
constexpr std::pair<EngineKind, std::string_view> kEngineNames[] = {
    {EngineKind::Conventional, "conventional"},
    {EngineKind::TrustAware, "trust-aware"},
};

constexpr std::pair<Figure, std::string_view> kFigureNames[] = {
    {Figure::Fig2, "fig2"},
    {Figure::Fig3, "fig3"},
    {Figure::Fig4, "fig4"},
};
}  // namespace

std::string_view engine_name(EngineKind e) {
    for (const auto& [engine, name] : kEngineNames)
        if (engine == e) return name;
    throw std::logic_error("engine_name: unhandled engine");
}

EngineKind engine_from_name(std::string_view name) {
    for (const auto& [engine, known] : kEngineNames)
        if (known == name) return engine;
    throw ConfigError("unknown engine '" + std::string(name) + "'");
}

const std::vector<std::string_view>& engine_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto& [engine, name] : kEngineNames) out.push_back(name);
        return out;
    }();
    return names;
}

Figure figure_from_name(std::string_view name) {
    for (const auto& [figure, known] : kFigureNames)
        if (known == name) return figure;
    throw ConfigError("unknown figure '" + std::string(name) + "'");
}

const std::vector<std::string_view>& figure_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto& [figure, name] : kFigureNames) out.push_back(name);
        return out;
    }();
    return names;
}

void validate(const Scenario& scenario) {
    validate(scenario.world);
    validate(scenario.attack);
    if (scenario.attack.attacker_count_max > scenario.world.agent_count)
        throw std::invalid_argument("attacker_count_max exceeds agent_count");
    validate(scenario.detector);
    validate(scenario.strategy);
    if (scenario.runs < 1) throw std::invalid_argument("runs must be at least 1");
}

double mean_honest_distance(const std::vector<AgentState>& swarm, const Position& target) {
    double sum = 0.0;
    int honest = 0;
    for (const auto& agent : swarm) {
        if (agent.is_attacker) continue;
        sum += true_distance(agent.position, target);
        ++honest;
    }
    if (honest == 0) throw std::domain_error("mean_honest_distance: no honest agents");
    return sum / honest;
}

std::pair<double, double> detection_rates(const std::vector<AgentState>& swarm) {
    int attackers = 0, missed = 0, honest = 0, false_alarms = 0;
    for (const auto& agent : swarm) {
        if (agent.is_attacker) {
            ++attackers;
            if (!agent.flagged) ++missed;
        } else {
            ++honest;
            if (agent.flagged) ++false_alarms;
        }
    }
    const double r_md = attackers == 0 ? 0.0 : static_cast<double>(missed) / attackers;
    const double r_fa = honest == 0 ? 0.0 : static_cast<double>(false_alarms) / honest;
    return {r_md, r_fa};
}

std::vector<IterationMetrics> simulate_run(const Scenario& scenario, std::uint64_t seed) {
    auto placement = make_stream(seed, Concern::Placement);
    auto swarm = init_swarm(scenario.world, placement);

    auto selector = make_stream(seed, Concern::AttackerSelect);
    for (int idx : select_attackers(scenario.world.agent_count, scenario.attack, selector))
        swarm[static_cast<std::size_t>(idx)].is_attacker = true;
    for (auto& agent : swarm) agent.trust = scenario.strategy.rho_init;

    auto rngs = make_run_rngs(seed, scenario.world.agent_count);
    SwarmBest best;

    std::vector<IterationMetrics> table;
    table.reserve(static_cast<std::size_t>(scenario.world.horizon));
    for (int t = 1; t <= scenario.world.horizon; ++t) {
        if (scenario.engine == EngineKind::Conventional) {
            step_conventional(swarm, best, scenario.world, scenario.attack, rngs,
                              &scenario.detector, &scenario.strategy);
        } else {
            step_trust_aware(swarm, best, scenario.world, scenario.attack, scenario.detector,
                             scenario.strategy, scenario.policy, rngs);
        }
        const auto [r_md, r_fa] = detection_rates(swarm);
        table.push_back({t, mean_honest_distance(swarm, scenario.world.target), r_md, r_fa});
    }
    return table;
}

std::vector<IterationMetrics> run_scenario(const Scenario& scenario, int jobs) {
    validate(scenario);
    const int runs = scenario.runs;
    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, runs);

    std::vector<std::vector<IterationMetrics>> per_run(static_cast<std::size_t>(runs));
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&](int first) {
        for (int r = first; r < runs; r += workers) {
            try {
                per_run[static_cast<std::size_t>(r)] =
                    simulate_run(scenario, run_seed(scenario.master_seed, static_cast<std::uint64_t>(r)));
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    if (workers == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    // Accumulate in run-index order so the result is independent of
    // scheduling.
    const auto horizon = static_cast<std::size_t>(scenario.world.horizon);
    std::vector<IterationMetrics> mean(horizon);
    for (std::size_t t = 0; t < horizon; ++t) mean[t].t = static_cast<int>(t) + 1;
    for (int r = 0; r < runs; ++r) {
        const auto& table = per_run[static_cast<std::size_t>(r)];
        for (std::size_t t = 0; t < horizon; ++t) {
            mean[t].mean_honest_distance += table[t].mean_honest_distance;
            mean[t].r_md += table[t].r_md;
            mean[t].r_fa += table[t].r_fa;
        }
    }
    for (auto& row : mean) {
        row.mean_honest_distance /= runs;
        row.r_md /= runs;
        row.r_fa /= runs;
    }
    return mean;
}

namespace {

/// Reference experiment defaults shared by all reproduction scenarios.
Scenario grid_scenario(std::uint64_t seed, int runs) {
    Scenario s;
    s.world = WorldConfig{};
    s.detector = DetectorSpec{0.5, 0.05};
    s.strategy = strategy_preset("binary-binary");
    s.policy = GenBestPolicy::BinaryRejection;
    s.attack.theta = 1.0;
    s.attack.attacker_count_min = 3;
    s.attack.attacker_count_max = 10;
    s.runs = runs;
    s.master_seed = seed;
    return s;
}

struct GridEntry {
    Scenario scenario;
    std::string subfigure;
    std::vector<IterationMetrics> table;
};

constexpr double kRates[] = {0.5, 0.1};
constexpr char kRateTag[] = {'a', 'b'};

std::vector<GridEntry> build_fig2_grid(std::uint64_t base_seed, int runs) {
    std::vector<GridEntry> grid;
    std::uint64_t ordinal = 0;
    for (std::size_t ri = 0; ri < 2; ++ri) {
        for (const auto model_name : attack_model_names()) {
            Scenario s = grid_scenario(mix64(base_seed + ordinal++), runs);
            s.engine = EngineKind::Conventional;
            s.attack.model = attack_model_from_name(model_name);
            s.attack.rate = kRates[ri];
            const std::string sub = std::string("fig2") + kRateTag[ri];
            s.name = sub + "_" + std::string(model_name);
            grid.push_back({std::move(s), sub, {}});
        }
    }
    return grid;
}

std::vector<GridEntry> build_fig3_grid(std::uint64_t base_seed, int runs) {
    std::vector<GridEntry> grid;
    std::uint64_t ordinal = 100;
    for (const double rate : kRates) {
        for (const auto strategy : strategy_preset_names()) {
            Scenario s = grid_scenario(mix64(base_seed + ordinal++), runs);
            s.engine = EngineKind::Conventional;
            s.attack.model = AttackModel::ZeroDistance;
            s.attack.rate = rate;
            s.strategy = strategy_preset(strategy);
            s.name = "fig3_rate" + std::to_string(static_cast<int>(rate * 100)) + "_" +
                     std::string(strategy);
            grid.push_back({std::move(s), "", {}});
        }
    }
    return grid;
}

std::vector<GridEntry> build_fig4_grid(std::uint64_t base_seed, int runs) {
    constexpr AttackModel kModels[] = {AttackModel::ZeroDistance, AttackModel::RandomDistance};
    const char* kSub[] = {"fig4a", "fig4b", "fig4c", "fig4d"};
    std::vector<GridEntry> grid;
    std::size_t subfigure = 0;
    for (const double rate : kRates) {
        for (const auto model : kModels) {
            // The four engine variants of one sub-figure share a master seed:
            // paired runs make the policy comparison a common-random-numbers
            // experiment.
            const std::uint64_t seed = mix64(base_seed + 200 + subfigure);
            auto add = [&](EngineKind engine, GenBestPolicy policy, std::string_view label) {
                Scenario s = grid_scenario(seed, runs);
                s.engine = engine;
                s.policy = policy;
                s.strategy = strategy_preset("linear-exp");
                s.attack.model = model;
                s.attack.rate = rate;
                s.name = std::string(kSub[subfigure]) + "_" + std::string(label);
                grid.push_back({std::move(s), kSub[subfigure], {}});
            };
            add(EngineKind::Conventional, GenBestPolicy::BinaryRejection, "conventional");
            for (const auto policy : policy_names())
                add(EngineKind::TrustAware, policy_from_name(policy), policy);
            ++subfigure;
        }
    }
    return grid;
}

std::vector<GridEntry> build_grid(Figure figure, std::uint64_t base_seed, int runs) {
    switch (figure) {
        case Figure::Fig2: return build_fig2_grid(base_seed, runs);
        case Figure::Fig3: return build_fig3_grid(base_seed, runs);
        case Figure::Fig4: return build_fig4_grid(base_seed, runs);
    }
    throw std::logic_error("build_grid: unhandled figure");
}

std::vector<double> column(const std::vector<IterationMetrics>& table,
                           double IterationMetrics::*field) {
    std::vector<double> out;
    out.reserve(table.size());
    for (const auto& row : table) out.push_back(row.*field);
    return out;
}

void plot_figure(Figure figure, const std::vector<GridEntry>& grid,
                 const std::filesystem::path& out_dir,
                 std::vector<std::filesystem::path>& written) {
    auto emit = [&](const std::string& stem, const std::string& title, const std::string& y_label,
                    const std::vector<ChartSeries>& series) {
        const auto path = out_dir / (stem + ".svg");
        write_line_chart_file(path, title, "iteration", y_label, series);
        written.push_back(path);
    };

    if (figure == Figure::Fig3) {
        // Four charts: r_md and r_fa per attack rate, five strategy curves each.
        for (std::size_t ri = 0; ri < 2; ++ri) {
            const int percent = static_cast<int>(kRates[ri] * 100);
            const std::string rate_tag = "rate" + std::to_string(percent);
            std::vector<ChartSeries> md_series, fa_series;
            for (const auto& entry : grid) {
                if (entry.scenario.name.find("fig3_" + rate_tag) != 0) continue;
                const std::string label = strategy_name(entry.scenario.strategy);
                md_series.push_back({label, column(entry.table, &IterationMetrics::r_md)});
                fa_series.push_back({label, column(entry.table, &IterationMetrics::r_fa)});
            }
            const std::string suffix = " at " + std::to_string(percent) + "% attack rate";
            emit(std::string("fig3") + static_cast<char>('a' + 2 * ri), "misdetection rate" + suffix,
                 "r_md", md_series);
            emit(std::string("fig3") + static_cast<char>('b' + 2 * ri), "false alarm rate" + suffix,
                 "r_fa", fa_series);
        }
        return;
    }

    // fig2 and fig4 chart the convergence metric, grouped by sub-figure.
    std::vector<std::string> subfigures;
    for (const auto& entry : grid)
        if (std::find(subfigures.begin(), subfigures.end(), entry.subfigure) == subfigures.end())
            subfigures.push_back(entry.subfigure);
    for (const auto& sub : subfigures) {
        std::vector<ChartSeries> series;
        for (const auto& entry : grid) {
            if (entry.subfigure != sub) continue;
            const std::string label = entry.scenario.name.substr(sub.size() + 1);
            series.push_back({label, column(entry.table, &IterationMetrics::mean_honest_distance)});
        }
        emit(sub, sub + " mean honest agent-target distance", "distance [m]", series);
    }
}

}  // namespace

std::vector<std::filesystem::path> reproduce(Figure figure, const ReproduceOptions& options) {
    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + options.out_dir.string() +
                      "': " + ec.message());

    auto grid = build_grid(figure, options.base_seed, options.runs);
    std::vector<std::filesystem::path> written;
    for (auto& entry : grid) {
        entry.table = run_scenario(entry.scenario, options.jobs);
        const auto path = options.out_dir / (entry.scenario.name + ".csv");
        write_scenario_csv_file(path, entry.scenario, entry.table);
        written.push_back(path);
    }
    if (options.plot) plot_figure(figure, grid, options.out_dir, written);
    return written;
}

}  // namespace swarmtrust
