#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "messaging.hpp"
#include "wsnq/protocols.hpp"

namespace wsnq::protocols {

namespace {

// Connected components of the subgraph induced by `members` (sorted ids).
std::vector<std::vector<int>> induced_components(const Topology& topology,
                                                 const std::vector<int>& members) {
    std::vector<std::vector<int>> components;
    std::vector<bool> seen(topology.size(), false);
    std::vector<bool> in_set(topology.size(), false);
    for (int v : members) in_set[v] = true;
    for (int start : members) {
        if (seen[start]) continue;
        std::vector<int> component;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            component.push_back(u);
            for (int v : topology.neighbors(u)) {
                if (in_set[v] && !seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        components.push_back(std::move(component));
    }
    return components;
}

bool covers_neighborhood(const Topology& topology, int u, const std::vector<int>& cover) {
    std::vector<bool> in_cover(topology.size(), false);
    for (int c : cover) in_cover[c] = true;
    for (int w : topology.neighbors(u)) {
        if (in_cover[w]) continue;
        bool covered = false;
        for (int c : cover) {
            if (topology.adjacent(w, c)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

} // namespace

ProtocolOutcome run_cds_rule_k(const Topology& topology, const ProtocolConfig& config,
                               const RadioParams& params, const StepObserver& observer) {
    config.validate();
    if (topology.size() == 0) throw std::domain_error("run_cds_rule_k: empty topology");

    std::vector<Node> nodes = topology.nodes;
    detail::Messenger msg(nodes, topology, params, config.reception_charging);
    const int n = topology.size();

    // Neighbor discovery: hello, then the neighbor list, so every node knows
    // its 2-hop structure.
    for (int u = 0; u < n; ++u) {
        msg.broadcast(u); // hello
        msg.broadcast(u); // neighbor list
    }

    // Wu-Li marking: u is marked iff it has two mutually non-adjacent neighbors.
    std::vector<bool> marked(n, false);
    for (int u = 0; u < n; ++u) {
        const auto& nbrs = topology.neighbors(u);
        for (std::size_t i = 0; i < nbrs.size() && !marked[u]; ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (!topology.adjacent(nbrs[i], nbrs[j])) {
                    marked[u] = true;
                    break;
                }
            }
        }
    }

    // Marking leaves complete components (including isolated nodes) headless;
    // mark the highest-priority node of each such component so domination holds.
    std::vector<int> all_ids(n);
    std::iota(all_ids.begin(), all_ids.end(), 0);
    for (const auto& component : induced_components(topology, all_ids)) {
        bool any = false;
        for (int v : component) any = any || marked[v];
        if (any) continue;
        int best = component.front();
        for (int v : component) {
            if (detail::beats(nodes[v], nodes[best])) best = v;
        }
        marked[best] = true;
    }

    // Rule-K pruning, lowest priority first; every marked node announces its
    // decision with one broadcast. A node withdraws iff some connected set of
    // at least rule_k currently-marked higher-priority neighbors covers its
    // whole neighborhood.
    std::vector<int> order;
    for (int u = 0; u < n; ++u) {
        if (marked[u]) order.push_back(u);
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return detail::beats(nodes[b], nodes[a]); });

    for (int u : order) {
        std::vector<int> higher;
        for (int v : topology.neighbors(u)) {
            if (marked[v] && detail::beats(nodes[v], nodes[u])) higher.push_back(v);
        }
        bool withdraw = false;
        for (const auto& component : induced_components(topology, higher)) {
            if (static_cast<int>(component.size()) >= config.rule_k &&
                covers_neighborhood(topology, u, component)) {
                withdraw = true;
                break;
            }
        }
        msg.broadcast(u); // pruning decision
        if (withdraw) marked[u] = false;
        if (observer) observer(marked);
    }

    std::vector<Role> roles(n, Role::Normal);
    for (int u = 0; u < n; ++u) {
        if (marked[u]) roles[u] = Role::ClusterHead;
    }
    return detail::finish_outcome(topology, std::move(nodes), std::move(roles), msg.count());
}

} // namespace wsnq::protocols
