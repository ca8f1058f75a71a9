#pragma once

#include "swarmtrust/rng.hpp"

namespace swarmtrust {

/// Abstract per-report anomaly detector, characterized only by its error
/// rates. It stands in for any concrete model-based or learned detector.
struct DetectorSpec {
    double p_md = 0.5;   // misdetection probability
    double p_fa = 0.05;  // false-alarm probability
};

void validate(const DetectorSpec& spec);

/// Flags an injected report with probability 1 - p_md and any other report
/// with probability p_fa. The verdict never depends on the reported value.
/// Consumes exactly one draw per call.
bool classify(bool attacked_now, const DetectorSpec& spec, Pcg32& rng);

}  // namespace swarmtrust
