#pragma once

#include <cmath>

namespace wsnq {

struct Position {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

} // namespace wsnq
