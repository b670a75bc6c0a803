#include <benchmark/benchmark.h>

#include "wsnq/deploy.hpp"
#include "wsnq/harness.hpp"
#include "wsnq/protocols.hpp"
#include "wsnq/statmech.hpp"
#include "wsnq/topology.hpp"

namespace {

using namespace wsnq;

void bm_build_topology(benchmark::State& state) {
    DeploymentConfig config;
    config.n_nodes = static_cast<int>(state.range(0));
    config.seed = 9;
    const auto nodes = deploy(config);
    for (auto _ : state) {
        auto topology = build_topology(nodes, config.comm_radius);
        benchmark::DoNotOptimize(topology);
    }
}
BENCHMARK(bm_build_topology)->Arg(50)->Arg(200)->Arg(500);

void bm_protocol(benchmark::State& state, protocols::ProtocolKind kind) {
    DeploymentConfig config;
    config.n_nodes = static_cast<int>(state.range(0));
    config.seed = 9;
    const Topology topology = build_topology(deploy(config), config.comm_radius);
    protocols::ProtocolConfig protocol;
    protocol.kind = kind;
    const RadioParams params;
    for (auto _ : state) {
        auto outcome = run_protocol(topology, protocol, params);
        benchmark::DoNotOptimize(outcome);
    }
}
BENCHMARK_CAPTURE(bm_protocol, cds_rule_k, protocols::ProtocolKind::CdsRuleK)->Arg(50)->Arg(100);
BENCHMARK_CAPTURE(bm_protocol, a3, protocols::ProtocolKind::A3)->Arg(50)->Arg(100);
BENCHMARK_CAPTURE(bm_protocol, eecds, protocols::ProtocolKind::Eecds)->Arg(50)->Arg(100);

void bm_solve_multipliers(benchmark::State& state) {
    statmech::MaxEntProblem problem;
    const auto n_levels = static_cast<int>(state.range(0));
    UniformRng rng(13);
    for (int i = 0; i < n_levels; ++i)
        problem.levels.push_back({1.0 + rng.next(30.0), rng.next(4.0)});
    problem.n_total = 100.0;
    problem.u_total = 100.0 * statmech::mean_energy(problem.levels, 0.5);
    for (auto _ : state) {
        auto solution = statmech::solve_multipliers(problem);
        benchmark::DoNotOptimize(solution);
    }
}
BENCHMARK(bm_solve_multipliers)->Arg(5)->Arg(50)->Arg(500);

} // namespace

BENCHMARK_MAIN();
