#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wsnq/node.hpp"

namespace wsnq {

struct DeploymentConfig {
    double area_width = 300.0;   // m
    double area_height = 300.0;  // m
    int n_nodes = 50;
    double comm_radius = 100.0;  // m
    double initial_energy = 1.0; // J per node
    std::uint64_t seed = 42;
    bool pin_sink_center = false; // place node 0 at the area center instead of randomly

    void validate() const;
};

/// Deterministic uniform double generator: mt19937_64 with the top 53 bits
/// mapped onto [0,1). The mapping is fixed so identical seeds reproduce
/// identical deployments.
class UniformRng {
public:
    explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0,1).
    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [0,hi).
    double next(double hi) { return next() * hi; }

private:
    std::mt19937_64 engine_;
};

/// Scatter n_nodes uniformly over the rectangle. Node 0 is the sink/initiator.
/// Positions are drawn in id order, x before y.
std::vector<Node> deploy(const DeploymentConfig& config);

} // namespace wsnq
