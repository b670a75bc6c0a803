#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "messaging.hpp"
#include "wsnq/protocols.hpp"

namespace wsnq::protocols {

namespace {

enum class Color { White, Gray, Black };

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

// Phase 1 elects a maximal independent set of black nodes by weight
// competition (residual energy, then lower id); phase 2 promotes gray
// connectors until the heads of every topology component are connected.
ProtocolOutcome run_eecds(const Topology& topology, const ProtocolConfig& config,
                          const RadioParams& params) {
    config.validate();
    if (topology.size() == 0) throw std::domain_error("run_eecds: empty topology");

    std::vector<Node> nodes = topology.nodes;
    detail::Messenger msg(nodes, topology, params, config.reception_charging);
    const int n = topology.size();

    // Discovery hello plus the weight announcement every competitor needs.
    for (int u = 0; u < n; ++u) {
        msg.broadcast(u);
        msg.broadcast(u);
    }

    // Weights are frozen here so in-phase charges do not reorder the competition.
    std::vector<Node> snapshot = nodes;
    auto heavier = [&](int a, int b) { return detail::beats(snapshot[a], snapshot[b]); };

    std::vector<Color> color(n, Color::White);
    auto declare_black = [&](int u) {
        color[u] = Color::Black;
        msg.broadcast(u); // black declaration
        for (int v : topology.neighbors(u)) {
            if (color[v] == Color::White) {
                color[v] = Color::Gray;
                msg.broadcast(v); // gray announcement
            }
        }
    };

    declare_black(0); // the sink initiates

    std::vector<int> by_weight(n);
    std::iota(by_weight.begin(), by_weight.end(), 0);
    std::sort(by_weight.begin(), by_weight.end(), heavier);
    for (int u : by_weight) {
        if (color[u] == Color::White) declare_black(u);
    }

    // Phase 2: connect the black components of each topology component by
    // promoting the gray node adjacent to the most distinct head components.
    std::vector<bool> head(n, false);
    for (int u = 0; u < n; ++u) head[u] = color[u] == Color::Black;

    std::vector<int> topo_comp(n, -1);
    int n_topo_comps = 0;
    for (int start = 0; start < n; ++start) {
        if (topo_comp[start] != -1) continue;
        std::vector<int> stack{start};
        topo_comp[start] = n_topo_comps;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : topology.neighbors(u)) {
                if (topo_comp[v] == -1) {
                    topo_comp[v] = n_topo_comps;
                    stack.push_back(v);
                }
            }
        }
        ++n_topo_comps;
    }

    while (true) {
        UnionFind uf(n);
        for (int u = 0; u < n; ++u) {
            if (!head[u]) continue;
            for (int v : topology.neighbors(u)) {
                if (v > u && head[v]) uf.unite(u, v);
            }
        }
        std::vector<int> head_comps_in(n_topo_comps, 0);
        std::vector<bool> counted(n, false);
        for (int u = 0; u < n; ++u) {
            if (head[u] && !counted[uf.find(u)]) {
                counted[uf.find(u)] = true;
                ++head_comps_in[topo_comp[u]];
            }
        }
        int candidate = -1;
        int candidate_score = 0;
        for (int g = 0; g < n; ++g) {
            if (head[g] || head_comps_in[topo_comp[g]] < 2) continue;
            std::vector<int> roots;
            for (int v : topology.neighbors(g)) {
                if (head[v]) roots.push_back(uf.find(v));
            }
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            const int score = static_cast<int>(roots.size());
            if (score == 0) continue;
            if (candidate == -1 || score > candidate_score ||
                (score == candidate_score && heavier(g, candidate))) {
                candidate = g;
                candidate_score = score;
            }
        }
        if (candidate == -1) break;
        head[candidate] = true;
        msg.broadcast(candidate); // promotion announcement
    }

    std::vector<Role> roles(n, Role::Normal);
    for (int u = 0; u < n; ++u) {
        if (head[u]) roles[u] = Role::ClusterHead;
    }
    return detail::finish_outcome(topology, std::move(nodes), std::move(roles), msg.count());
}

} // namespace wsnq::protocols
