#pragma once

#include <stdexcept>
#include <string>

namespace wsnq {

/// A node was asked to spend more energy than its battery holds.
class BatteryDepletedError : public std::runtime_error {
public:
    BatteryDepletedError(int node_id, double requested, double available)
        : std::runtime_error("node " + std::to_string(node_id) +
                             " battery depleted: charge " + std::to_string(requested) +
                             " J exceeds remaining " + std::to_string(available) + " J"),
          node_id(node_id) {}

    int node_id;
};

/// A class mean (cluster-head or normal) is undefined because the class is empty.
class DegenerateClassError : public std::runtime_error {
public:
    explicit DegenerateClassError(const std::string& which)
        : std::runtime_error("degenerate class: no " + which + " nodes"),
          class_name(which) {}

    std::string class_name;
};

/// The requested total energy cannot be met by any occupancy assignment.
class InfeasibleError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested total energy sits exactly on a feasibility boundary (beta diverges).
class BoundaryError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range configuration input. line == 0 means a flag override.
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "config line " + std::to_string(line) + ": " + what
                                      : "config: " + what),
          line(line) {}

    int line;
};

} // namespace wsnq
