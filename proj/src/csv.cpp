#include "swarmtrust/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "swarmtrust/errors.hpp"

namespace swarmtrust {

std::string_view csv_header() {
    return "scenario,engine,attack_model,attack_rate,policy,strategy,iteration,"
           "mean_distance_m,r_md,r_fa";
}

std::string format_sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_scenario_csv(std::ostream& os, const Scenario& scenario,
                        std::span<const IterationMetrics> table) {
    os << csv_header() << '\n';
    const std::string prefix = scenario.name + "," + std::string(engine_name(scenario.engine)) +
                               "," + std::string(attack_model_name(scenario.attack.model)) + "," +
                               format_sig6(scenario.attack.rate) + "," +
                               std::string(policy_name(scenario.policy)) + "," +
                               strategy_name(scenario.strategy) + ",";
    for (const auto& row : table) {
        os << prefix << row.t << ',' << format_sig6(row.mean_honest_distance) << ','
           << format_sig6(row.r_md) << ',' << format_sig6(row.r_fa) << '\n';
    }
}

std::string scenario_csv_string(const Scenario& scenario,
                                std::span<const IterationMetrics> table) {
    std::ostringstream os;
    write_scenario_csv(os, scenario, table);
    return os.str();
}

void write_scenario_csv_file(const std::filesystem::path& path, const Scenario& scenario,
                             std::span<const IterationMetrics> table) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
    write_scenario_csv(os, scenario, table);
    os.flush();
    if (!os) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace swarmtrust
