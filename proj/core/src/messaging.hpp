#pragma once

#include <vector>

#include "wsnq/ledger.hpp"
#include "wsnq/protocols.hpp"

namespace wsnq::protocols::detail {

/// Charges every control message against the per-run node copies and keeps
/// the message count. Reception charging applies to every addressee when
/// enabled.
class Messenger {
public:
    Messenger(std::vector<Node>& nodes, const Topology& topology, const RadioParams& params,
              bool reception_charging)
        : nodes_(nodes), topology_(topology), params_(params), reception_(reception_charging) {}

    void broadcast(int sender) {
        charge_broadcast(nodes_[sender], topology_, params_);
        ++count_;
        if (reception_) {
            for (int v : topology_.neighbors(sender)) charge_reception(nodes_[v], params_);
        }
    }

    void unicast(int sender, int receiver) {
        charge_unicast(nodes_[sender], nodes_[receiver], params_);
        ++count_;
        if (reception_) charge_reception(nodes_[receiver], params_);
    }

    long long count() const { return count_; }

private:
    std::vector<Node>& nodes_;
    const Topology& topology_;
    const RadioParams& params_;
    bool reception_;
    long long count_ = 0;
};

/// Total deterministic priority: residual energy descending, id ascending.
inline bool beats(const Node& a, const Node& b) {
    if (a.residual_energy() != b.residual_energy())
        return a.residual_energy() > b.residual_energy();
    return a.id < b.id;
}

inline ProtocolOutcome finish_outcome(const Topology& topology, std::vector<Node> nodes,
                                      std::vector<Role> roles, long long messages) {
    ProtocolOutcome outcome;
    outcome.roles = std::move(roles);
    outcome.messages_sent = messages;
    outcome.consumed_energy.reserve(nodes.size());
    for (const auto& node : nodes) outcome.consumed_energy.push_back(node.consumed_energy);
    // Default backbone: all topology edges between cluster-heads.
    for (int u = 0; u < topology.size(); ++u) {
        if (outcome.roles[u] != Role::ClusterHead) continue;
        for (int v : topology.neighbors(u)) {
            if (v > u && outcome.roles[v] == Role::ClusterHead) outcome.backbone_edges.emplace_back(u, v);
        }
    }
    return outcome;
}

} // namespace wsnq::protocols::detail
