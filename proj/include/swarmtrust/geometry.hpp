#pragma once

#include <cmath>

namespace swarmtrust {

/// 2-D position in meters.
struct Position {
    double x = 0.0;
    double y = 0.0;
};

/// 2-D velocity in meters per round.
struct Velocity {
    double vx = 0.0;
    double vy = 0.0;
};

inline double norm(const Velocity& v) { return std::hypot(v.vx, v.vy); }

inline double distance(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

inline bool is_finite(const Position& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

inline bool is_finite(const Velocity& v) {
    return std::isfinite(v.vx) && std::isfinite(v.vy);
}

}  // namespace swarmtrust
