#include <stdexcept>

#include "wsnq/protocols.hpp"

namespace wsnq::protocols {

void ProtocolConfig::validate() const {
    if (rule_k < 1) throw std::domain_error("protocol config: rule_k must be >= 1");
    if (a3_energy_weight < 0.0 || a3_energy_weight > 1.0)
        throw std::domain_error("protocol config: a3_energy_weight must be in [0,1]");
}

ProtocolOutcome run_protocol(const Topology& topology, const ProtocolConfig& config,
                             const RadioParams& params) {
    switch (config.kind) {
        case ProtocolKind::CdsRuleK: return run_cds_rule_k(topology, config, params);
        case ProtocolKind::A3: return run_a3(topology, config, params);
        case ProtocolKind::Eecds: return run_eecds(topology, config, params);
    }
    throw std::logic_error("run_protocol: unknown protocol kind");
}

CdsCheck verify_cds(const Topology& topology, std::span<const Role> roles) {
    CdsCheck check;
    const int n = topology.size();

    check.dominating = true;
    for (int u = 0; u < n; ++u) {
        if (roles[u] == Role::ClusterHead) continue;
        bool has_head_neighbor = false;
        for (int v : topology.neighbors(u)) {
            if (roles[v] == Role::ClusterHead) {
                has_head_neighbor = true;
                break;
            }
        }
        if (!has_head_neighbor) {
            check.dominating = false;
            break;
        }
    }

    std::vector<int> heads;
    for (int u = 0; u < n; ++u) {
        if (roles[u] == Role::ClusterHead) heads.push_back(u);
    }
    if (heads.size() <= 1) {
        check.connected = true;
        return check;
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{heads.front()};
    seen[heads.front()] = true;
    int reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++reached;
        for (int v : topology.neighbors(u)) {
            if (!seen[v] && roles[v] == Role::ClusterHead) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    check.connected = reached == static_cast<int>(heads.size());
    return check;
}

} // namespace wsnq::protocols
