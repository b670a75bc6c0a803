#pragma once

#include <vector>

#include "wsnq/node.hpp"

namespace wsnq {

/// Unit-disk graph over a node set: edge (u,v) iff u != v and
/// euclidean distance <= comm_radius. Neighbor lists are sorted by id.
struct Topology {
    std::vector<Node> nodes;
    std::vector<std::vector<int>> adjacency;
    double comm_radius = 0.0;

    int size() const { return static_cast<int>(nodes.size()); }
    int degree(int i) const { return static_cast<int>(adjacency[i].size()); }
    const std::vector<int>& neighbors(int i) const { return adjacency[i]; }
    bool adjacent(int u, int v) const;
};

Topology build_topology(std::vector<Node> nodes, double comm_radius);

} // namespace wsnq
