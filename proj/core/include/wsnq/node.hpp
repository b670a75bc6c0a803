#pragma once

#include "wsnq/geometry.hpp"

namespace wsnq {

enum class Role {
    Unassigned,
    ClusterHead,
    Normal,
};

struct Node {
    int id = 0;
    Position position;
    double initial_energy = 1.0;   // J
    double consumed_energy = 0.0;  // J, 0 <= consumed <= initial
    Role role = Role::Unassigned;

    double residual_energy() const { return initial_energy - consumed_energy; }
};

} // namespace wsnq
