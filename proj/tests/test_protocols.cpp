#include <doctest.h>

#include <cmath>
#include <vector>

#include "wsnq/deploy.hpp"
#include "wsnq/errors.hpp"
#include "wsnq/protocols.hpp"

using namespace wsnq;
using namespace wsnq::protocols;

namespace {

Topology topology_from(std::vector<Position> positions, double radius, double energy = 1.0) {
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        Node node;
        node.id = static_cast<int>(i);
        node.position = positions[i];
        node.initial_energy = energy;
        nodes.push_back(node);
    }
    return build_topology(std::move(nodes), radius);
}

bool is_connected(const Topology& topology) {
    std::vector<bool> seen(topology.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++reached;
        for (int v : topology.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return reached == topology.size();
}

int head_count(const ProtocolOutcome& outcome) {
    int heads = 0;
    for (Role role : outcome.roles)
        if (role == Role::ClusterHead) ++heads;
    return heads;
}

Topology random_topology(std::uint64_t seed, int n = 50) {
    DeploymentConfig config;
    config.n_nodes = n;
    config.seed = seed;
    return build_topology(deploy(config), config.comm_radius);
}

bool outcomes_identical(const ProtocolOutcome& a, const ProtocolOutcome& b) {
    return a.roles == b.roles && a.backbone_edges == b.backbone_edges &&
           a.messages_sent == b.messages_sent && a.consumed_energy == b.consumed_energy &&
           a.incomplete_coverage == b.incomplete_coverage;
}

} // namespace

TEST_CASE("single-node instances elect the lone node") {
    const Topology single = topology_from({{10.0, 10.0}}, 100.0);
    const RadioParams params;
    for (ProtocolKind kind : {ProtocolKind::CdsRuleK, ProtocolKind::A3, ProtocolKind::Eecds}) {
        ProtocolConfig config;
        config.kind = kind;
        const auto outcome = run_protocol(single, config, params);
        CHECK(outcome.roles[0] == Role::ClusterHead);
        CHECK(outcome.backbone_edges.empty());
    }
}

TEST_CASE("cds-rule-k keeps only the articulation node on a 3-path") {
    // a -- b -- c with a,c out of range of each other.
    const Topology path = topology_from({{0.0, 0.0}, {90.0, 0.0}, {180.0, 0.0}}, 100.0);
    const auto outcome = run_cds_rule_k(path, {}, {});
    CHECK(outcome.roles[0] == Role::Normal);
    CHECK(outcome.roles[1] == Role::ClusterHead);
    CHECK(outcome.roles[2] == Role::Normal);
    CHECK(outcome.backbone_edges.empty());
}

TEST_CASE("cds-rule-k handles complete components via the fallback head") {
    // A triangle marks nobody under Wu-Li; one head must still be elected.
    const Topology clique = topology_from({{0.0, 0.0}, {50.0, 0.0}, {25.0, 40.0}}, 100.0);
    const auto outcome = run_cds_rule_k(clique, {}, {});
    CHECK(head_count(outcome) == 1);
    const auto check = verify_cds(clique, outcome.roles);
    CHECK(check.dominating);
    CHECK(check.connected);
}

TEST_CASE("cds-rule-k pruning keeps domination at every step") {
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        const Topology topology = random_topology(seed);
        std::vector<bool> initial_marked;
        bool first = true;
        run_cds_rule_k(topology, {}, {}, [&](const std::vector<bool>& marked) {
            if (first) {
                initial_marked = marked; // first observation, after at most one unmark
                first = false;
            }
            std::vector<Role> roles(marked.size(), Role::Normal);
            for (std::size_t i = 0; i < marked.size(); ++i)
                if (marked[i]) roles[i] = Role::ClusterHead;
            CHECK(verify_cds(topology, roles).dominating);
        });
    }
}

TEST_CASE("cds-rule-k final heads are a subset of the marked set") {
    const Topology topology = random_topology(17);
    std::vector<std::vector<bool>> snapshots;
    const auto outcome = run_cds_rule_k(topology, {}, {}, [&](const std::vector<bool>& marked) {
        snapshots.push_back(marked);
    });
    REQUIRE(!snapshots.empty());
    // Every node marked at any point stays marked or becomes Normal; the final
    // head set never grows during pruning.
    for (std::size_t step = 1; step < snapshots.size(); ++step) {
        for (std::size_t i = 0; i < snapshots[step].size(); ++i) {
            CHECK((!snapshots[step][i] || snapshots[step - 1][i]));
        }
    }
    for (std::size_t i = 0; i < snapshots.back().size(); ++i) {
        CHECK((outcome.roles[i] == Role::ClusterHead) == snapshots.back()[i]);
    }
}

TEST_CASE("a3 puts redundant star leaves to sleep") {
    // Sink at the center, five leaves mutually out of range.
    std::vector<Position> positions = {{0.0, 0.0}};
    for (int i = 0; i < 5; ++i) {
        const double angle = 2.0 * M_PI * i / 5.0;
        positions.push_back({90.0 * std::cos(angle), 90.0 * std::sin(angle)});
    }
    const Topology star = topology_from(positions, 100.0);
    REQUIRE(star.degree(0) == 5);
    REQUIRE(star.degree(1) == 1);

    const auto outcome = run_a3(star, {}, {});
    CHECK(outcome.roles[0] == Role::ClusterHead);
    for (int leaf = 1; leaf <= 5; ++leaf) CHECK(outcome.roles[leaf] == Role::Normal);
    CHECK(outcome.backbone_edges.empty());
    CHECK_FALSE(outcome.incomplete_coverage);
}

TEST_CASE("a3 backbone is a tree that dominates connected instances") {
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 20; ++seed) {
        const Topology topology = random_topology(seed);
        if (!is_connected(topology)) continue;
        ++tested;
        ProtocolConfig config;
        config.kind = ProtocolKind::A3;
        const auto outcome = run_a3(topology, config, {});
        CHECK(verify_cds(topology, outcome.roles).dominating);
        CHECK_FALSE(outcome.incomplete_coverage);
        const int heads = head_count(outcome);
        CHECK(static_cast<int>(outcome.backbone_edges.size()) == heads - 1);
        CHECK(verify_cds(topology, outcome.roles).connected);
    }
}

TEST_CASE("a3 flags components unreachable from the sink") {
    // Two pairs far apart; the sink only reaches node 1.
    const Topology split =
        topology_from({{0.0, 0.0}, {50.0, 0.0}, {1000.0, 0.0}, {1050.0, 0.0}}, 100.0);
    const auto outcome = run_a3(split, {}, {});
    CHECK(outcome.incomplete_coverage);
    CHECK(outcome.roles[2] == Role::Normal);
    CHECK(outcome.roles[3] == Role::Normal);
    CHECK(outcome.consumed_energy[2] == 0.0);
    CHECK(outcome.consumed_energy[3] == 0.0);
}

TEST_CASE("eecds colors a two-node tie by id") {
    const Topology pair = topology_from({{0.0, 0.0}, {50.0, 0.0}}, 100.0);
    const auto outcome = run_eecds(pair, {}, {});
    CHECK(outcome.roles[0] == Role::ClusterHead);
    CHECK(outcome.roles[1] == Role::Normal);
}

TEST_CASE("protocols build connected dominating sets on seeded instances") {
    const RadioParams params;
    int tested = 0;
    for (std::uint64_t seed = 100; tested < 20; ++seed) {
        const Topology topology = random_topology(seed);
        if (!is_connected(topology)) continue;
        ++tested;
        for (ProtocolKind kind : {ProtocolKind::CdsRuleK, ProtocolKind::Eecds}) {
            ProtocolConfig config;
            config.kind = kind;
            const auto outcome = run_protocol(topology, config, params);
            const auto check = verify_cds(topology, outcome.roles);
            CHECK(check.dominating);
            CHECK(check.connected);
        }
    }
}

TEST_CASE("identical inputs replay to identical outcomes") {
    const RadioParams params;
    for (ProtocolKind kind : {ProtocolKind::CdsRuleK, ProtocolKind::A3, ProtocolKind::Eecds}) {
        ProtocolConfig config;
        config.kind = kind;
        const Topology topology = random_topology(7);
        const auto a = run_protocol(topology, config, params);
        const auto b = run_protocol(topology, config, params);
        CHECK(outcomes_identical(a, b));
    }
}

TEST_CASE("per-node energy equals the ledger total and is positive for n >= 2") {
    const Topology topology = random_topology(3, 30);
    for (ProtocolKind kind : {ProtocolKind::CdsRuleK, ProtocolKind::A3, ProtocolKind::Eecds}) {
        ProtocolConfig config;
        config.kind = kind;
        const auto outcome = run_protocol(topology, config, {});
        double total = 0.0;
        for (double e : outcome.consumed_energy) total += e;
        CHECK(total > 0.0);
        CHECK(outcome.messages_sent > 0);
    }
}

TEST_CASE("battery depletion propagates out of protocol runs") {
    DeploymentConfig config;
    config.n_nodes = 20;
    config.seed = 12;
    config.initial_energy = 1e-6; // far below one broadcast
    const Topology topology = build_topology(deploy(config), config.comm_radius);
    CHECK_THROWS_AS(run_cds_rule_k(topology, {}, {}), BatteryDepletedError);
    CHECK_THROWS_AS(run_a3(topology, {}, {}), BatteryDepletedError);
    CHECK_THROWS_AS(run_eecds(topology, {}, {}), BatteryDepletedError);
}

TEST_CASE("reception charging adds receiver-side cost") {
    const Topology topology = random_topology(42);
    ProtocolConfig with;
    with.reception_charging = true;
    const auto charged = run_cds_rule_k(topology, with, {});
    const auto baseline = run_cds_rule_k(topology, {}, {});
    double total_with = 0.0, total_without = 0.0;
    for (double e : charged.consumed_energy) total_with += e;
    for (double e : baseline.consumed_energy) total_without += e;
    CHECK(total_with > total_without);
}

TEST_CASE("verify_cds degenerate answers") {
    const Topology pair = topology_from({{0.0, 0.0}, {50.0, 0.0}}, 100.0);
    const std::vector<Role> all_heads = {Role::ClusterHead, Role::ClusterHead};
    CHECK(verify_cds(pair, all_heads).dominating);
    CHECK(verify_cds(pair, all_heads).connected);

    const std::vector<Role> none = {Role::Normal, Role::Normal};
    CHECK_FALSE(verify_cds(pair, none).dominating);
    CHECK(verify_cds(pair, none).connected); // vacuous
}
