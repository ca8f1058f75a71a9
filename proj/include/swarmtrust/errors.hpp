#pragma once

#include <stdexcept>

namespace swarmtrust {

/// Bad scenario configuration (unknown key, wrong type, invalid value).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem or stream failure while reading configs or writing results.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace swarmtrust
