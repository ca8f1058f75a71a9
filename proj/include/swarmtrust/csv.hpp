#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include "swarmtrust/harness.hpp"

namespace swarmtrust {

/// Exact header line (without the trailing newline) of every results CSV.
std::string_view csv_header();

/// Floating-point cell format: 6 significant digits.
std::string format_sig6(double v);

/// Writes one scenario's averaged metrics table: the fixed header plus one
/// row per iteration. UTF-8, LF line endings.
void write_scenario_csv(std::ostream& os, const Scenario& scenario,
                        std::span<const IterationMetrics> table);

std::string scenario_csv_string(const Scenario& scenario,
                                std::span<const IterationMetrics> table);

/// Same, to a file. Throws IoError on any write failure.
void write_scenario_csv_file(const std::filesystem::path& path, const Scenario& scenario,
                             std::span<const IterationMetrics> table);

}  // namespace swarmtrust
