#include <algorithm>
#include <deque>
#include <stdexcept>

#include "messaging.hpp"
#include "wsnq/protocols.hpp"

namespace wsnq::protocols {

// Tree-growing selection rooted at the sink (node 0). Each active head
// broadcasts a hello; neighbors without a role answer with the metric
// M = w * (residual/initial) + (1-w) * (distance/comm_radius) and are
// processed in M-descending order. A candidate joins the backbone iff some
// neighbor of it is still uncovered; otherwise it acknowledges the sleep
// order and later announces which cluster it joined.
ProtocolOutcome run_a3(const Topology& topology, const ProtocolConfig& config,
                       const RadioParams& params) {
    config.validate();
    if (topology.size() == 0) throw std::domain_error("run_a3: empty topology");

    std::vector<Node> nodes = topology.nodes;
    detail::Messenger msg(nodes, topology, params, config.reception_charging);
    const int n = topology.size();
    const double w = config.a3_energy_weight;

    std::vector<Role> roles(n, Role::Unassigned);
    std::vector<bool> covered(n, false); // dominated by an elected head
    std::vector<std::pair<int, int>> tree_edges;

    roles[0] = Role::ClusterHead;
    covered[0] = true;
    for (int v : topology.neighbors(0)) covered[v] = true;

    std::deque<int> active{0};
    while (!active.empty()) {
        const int parent = active.front();
        active.pop_front();

        msg.broadcast(parent); // hello

        std::vector<int> candidates;
        for (int v : topology.neighbors(parent)) {
            if (roles[v] == Role::Unassigned) candidates.push_back(v);
        }
        std::vector<double> metric(n, 0.0);
        for (int v : candidates) {
            msg.unicast(v, parent); // reply with metric inputs
            metric[v] = w * (nodes[v].residual_energy() / nodes[v].initial_energy) +
                        (1.0 - w) * (distance(nodes[v].position, nodes[parent].position) /
                                     topology.comm_radius);
        }
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            if (metric[a] != metric[b]) return metric[a] > metric[b];
            return a < b;
        });

        msg.broadcast(parent); // ranked candidate list / round completion

        for (int v : candidates) {
            bool useful = false;
            for (int u : topology.neighbors(v)) {
                if (!covered[u]) {
                    useful = true;
                    break;
                }
            }
            if (useful) {
                roles[v] = Role::ClusterHead;
                covered[v] = true;
                for (int u : topology.neighbors(v)) covered[u] = true;
                tree_edges.emplace_back(std::min(parent, v), std::max(parent, v));
                active.push_back(v);
            } else {
                roles[v] = Role::Normal;
                msg.broadcast(v); // sleep acknowledgement
            }
        }
    }

    // Attached nodes announce their cluster membership once the tree is final.
    bool incomplete = false;
    for (int v = 0; v < n; ++v) {
        if (roles[v] == Role::Normal) {
            msg.broadcast(v);
        } else if (roles[v] == Role::Unassigned) {
            roles[v] = Role::Normal; // unreachable from the sink, left asleep
            incomplete = true;
        }
    }

    ProtocolOutcome outcome;
    outcome.roles = std::move(roles);
    outcome.messages_sent = msg.count();
    outcome.incomplete_coverage = incomplete;
    outcome.backbone_edges = std::move(tree_edges);
    std::sort(outcome.backbone_edges.begin(), outcome.backbone_edges.end());
    outcome.consumed_energy.reserve(nodes.size());
    for (const auto& node : nodes) outcome.consumed_energy.push_back(node.consumed_energy);
    return outcome;
}

} // namespace wsnq::protocols
