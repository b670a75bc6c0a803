#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "wsnq/radio.hpp"
#include "wsnq/topology.hpp"

namespace wsnq::protocols {

enum class ProtocolKind {
    CdsRuleK,
    A3,
    Eecds,
};

struct ProtocolConfig {
    ProtocolKind kind = ProtocolKind::CdsRuleK;
    int rule_k = 2;                  // minimum size of a covering set (CdsRuleK only)
    double a3_energy_weight = 0.5;   // w in the A3 candidate metric, in [0,1]
    bool reception_charging = false; // charge alpha0*l to every receiver

    void validate() const;
};

struct ProtocolOutcome {
    std::vector<Role> roles;
    std::vector<std::pair<int, int>> backbone_edges; // (u,v) with u < v, heads only
    long long messages_sent = 0;
    std::vector<double> consumed_energy; // per-node snapshot after the run
    bool incomplete_coverage = false;    // A3: nodes unreachable from the sink exist
};

/// Invoked after each pruning decision with the current head candidate set;
/// lets tests check that every intermediate set still dominates.
using StepObserver = std::function<void(const std::vector<bool>& marked)>;

ProtocolOutcome run_cds_rule_k(const Topology& topology, const ProtocolConfig& config,
                               const RadioParams& params, const StepObserver& observer = {});
ProtocolOutcome run_a3(const Topology& topology, const ProtocolConfig& config,
                       const RadioParams& params);
ProtocolOutcome run_eecds(const Topology& topology, const ProtocolConfig& config,
                          const RadioParams& params);

/// Dispatch on config.kind.
ProtocolOutcome run_protocol(const Topology& topology, const ProtocolConfig& config,
                             const RadioParams& params);

struct CdsCheck {
    bool dominating = false;
    bool connected = false;
};

/// Brute-force check: every Normal node has a ClusterHead neighbor, and the
/// head-induced subgraph is connected (vacuously for <= 1 head).
CdsCheck verify_cds(const Topology& topology, std::span<const Role> roles);

} // namespace wsnq::protocols
