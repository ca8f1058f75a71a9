#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "swarmtrust/config.hpp"
#include "swarmtrust/csv.hpp"
#include "swarmtrust/errors.hpp"
#include "swarmtrust/harness.hpp"
#include "swarmtrust/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

struct CommonOptions {
    std::string out_dir = "results";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int runs = 0;
    int jobs = 0;
    bool plot = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("-o,--out", opt.out_dir, "Output directory for CSV/SVG files")
        ->envname("SWARMTRUST_OUT");
    cmd->add_option("-s,--seed", opt.seed, "Master seed override")->each([&](const std::string&) {
        opt.seed_set = true;
    });
    cmd->add_option("-r,--runs", opt.runs, "Monte-Carlo run count override")
        ->check(CLI::PositiveNumber);
    cmd->add_option("-j,--jobs", opt.jobs, "Max concurrent runs (0 = hardware threads)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("-p,--plot", opt.plot, "Also write SVG line charts");
}

int run_single(const std::string& config_path, const CommonOptions& opt) {
    swarmtrust::Scenario scenario = swarmtrust::load_scenario(config_path);
    if (opt.seed_set) scenario.master_seed = opt.seed;
    if (opt.runs > 0) scenario.runs = opt.runs;

    std::cerr << "running scenario '" << scenario.name << "' (" << scenario.runs << " runs, "
              << scenario.world.horizon << " iterations)\n";
    const auto table = swarmtrust::run_scenario(scenario, opt.jobs);

    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    if (ec) throw swarmtrust::IoError("cannot create output directory '" + opt.out_dir + "'");

    const auto csv_path = std::filesystem::path(opt.out_dir) / (scenario.name + ".csv");
    swarmtrust::write_scenario_csv_file(csv_path, scenario, table);
    std::cout << csv_path.string() << '\n';

    if (opt.plot) {
        std::vector<swarmtrust::ChartSeries> series;
        series.push_back({"mean distance", {}});
        for (const auto& row : table) series[0].values.push_back(row.mean_honest_distance);
        const auto svg_path = std::filesystem::path(opt.out_dir) / (scenario.name + ".svg");
        swarmtrust::write_line_chart_file(svg_path, scenario.name, "iteration", "distance [m]",
                                          series);
        std::cout << svg_path.string() << '\n';
    }
    return kExitOk;
}

int run_reproduce(const std::string& figure_name, const CommonOptions& opt) {
    const auto figure = swarmtrust::figure_from_name(figure_name);
    swarmtrust::ReproduceOptions options;
    options.out_dir = opt.out_dir;
    if (opt.seed_set) options.base_seed = opt.seed;
    if (opt.runs > 0) options.runs = opt.runs;
    options.jobs = opt.jobs;
    options.plot = opt.plot;

    std::cerr << "reproducing " << figure_name << " (" << options.runs
              << " runs per scenario) into " << opt.out_dir << '\n';
    const auto written = swarmtrust::reproduce(figure, options);
    for (const auto& path : written) std::cout << path.string() << '\n';
    return kExitOk;
}

void list_presets() {
    std::cout << "attack models:";
    for (const auto name : swarmtrust::attack_model_names()) std::cout << ' ' << name;
    std::cout << "\nstrategies:";
    for (const auto name : swarmtrust::strategy_preset_names()) std::cout << ' ' << name;
    std::cout << "\npolicies:";
    for (const auto name : swarmtrust::policy_names()) std::cout << ' ' << name;
    std::cout << "\nengines:";
    for (const auto name : swarmtrust::engine_names()) std::cout << ' ' << name;
    std::cout << "\nfigures:";
    for (const auto name : swarmtrust::figure_names()) std::cout << ' ' << name;
    std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trust-aware particle swarm simulator for multi-agent target localization "
                 "under data-injection attacks"};
    app.require_subcommand(1);

    CommonOptions run_opt;
    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "Run one scenario from a JSON config");
    run_cmd->add_option("-c,--config", config_path, "Scenario config file")->required();
    add_common(run_cmd, run_opt);

    CommonOptions rep_opt;
    std::string figure_name;
    auto* rep_cmd = app.add_subcommand("reproduce", "Run a full results-figure scenario grid");
    rep_cmd->add_option("-f,--figure", figure_name, "One of: fig2, fig3, fig4")->required();
    add_common(rep_cmd, rep_opt);

    auto* list_cmd = app.add_subcommand("list-presets", "Print the known preset names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (run_cmd->parsed()) return run_single(config_path, run_opt);
        if (rep_cmd->parsed()) return run_reproduce(figure_name, rep_opt);
        if (list_cmd->parsed()) {
            list_presets();
            return kExitOk;
        }
    } catch (const swarmtrust::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const swarmtrust::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
