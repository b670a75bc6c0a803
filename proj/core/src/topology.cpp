#include "wsnq/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace wsnq {

bool Topology::adjacent(int u, int v) const {
    const auto& nbrs = adjacency[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Topology build_topology(std::vector<Node> nodes, double comm_radius) {
    if (nodes.empty()) throw std::domain_error("build_topology: empty node set");
    if (!(comm_radius > 0.0)) throw std::domain_error("build_topology: comm_radius must be > 0");

    Topology topology;
    topology.comm_radius = comm_radius;
    const int n = static_cast<int>(nodes.size());
    topology.adjacency.assign(n, {});
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (distance(nodes[u].position, nodes[v].position) <= comm_radius) {
                topology.adjacency[u].push_back(v);
                topology.adjacency[v].push_back(u);
            }
        }
    }
    topology.nodes = std::move(nodes);
    return topology;
}

} // namespace wsnq
