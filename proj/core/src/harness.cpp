#include "wsnq/harness.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "wsnq/errors.hpp"
#include "wsnq/topology.hpp"

namespace wsnq::harness {

statmech::ClassStats class_stats(const protocols::ProtocolOutcome& outcome, bool weighted_total) {
    double sum_ch = 0.0, sum_n = 0.0;
    int n_ch = 0, n_normal = 0;
    for (std::size_t i = 0; i < outcome.roles.size(); ++i) {
        if (outcome.roles[i] == Role::ClusterHead) {
            sum_ch += outcome.consumed_energy[i];
            ++n_ch;
        } else {
            sum_n += outcome.consumed_energy[i];
            ++n_normal;
        }
    }
    if (n_ch == 0) throw DegenerateClassError("cluster-head");
    if (n_normal == 0) throw DegenerateClassError("normal");

    statmech::ClassStats stats;
    stats.n_ch = n_ch;
    stats.n_normal = n_normal;
    stats.n_total = n_ch + n_normal;
    stats.e_ch = sum_ch / n_ch;
    stats.e_normal = sum_n / n_normal;
    stats.e_total = weighted_total ? (sum_ch + sum_n) / stats.n_total
                                   : (stats.e_ch + stats.e_normal) / 2.0;
    return stats;
}

namespace {

std::string area_label(const DeploymentConfig& deployment) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%gx%g", deployment.area_width, deployment.area_height);
    return buf;
}

} // namespace

TrialRow run_trial(const ExperimentConfig& config, int n, std::uint64_t seed) {
    DeploymentConfig deployment = config.deployment;
    deployment.n_nodes = n;
    deployment.seed = seed;

    const Topology topology = build_topology(deploy(deployment), deployment.comm_radius);
    const protocols::ProtocolOutcome outcome =
        protocols::run_protocol(topology, config.protocol, config.radio);
    const statmech::ClassStats stats = class_stats(outcome);

    TrialRow row;
    row.area = area_label(deployment);
    row.n_total = static_cast<int>(stats.n_total);
    row.n_ch = static_cast<int>(stats.n_ch);
    row.n_normal = static_cast<int>(stats.n_normal);
    row.e_total = stats.e_total;
    row.e_ch = stats.e_ch;
    row.e_normal = stats.e_normal;
    row.q = statmech::q_factor(stats, statmech::QMode::TableConvention);
    row.seed = seed;
    return row;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& config) {
    if (config.node_counts.empty()) throw std::domain_error("run_sweep: node_counts empty");
    if (config.trials_per_count < 1) throw std::domain_error("run_sweep: trials_per_count must be >= 1");

    std::vector<SweepRow> rows;
    std::uint64_t index = 0;
    for (int n : config.node_counts) {
        for (int trial = 0; trial < config.trials_per_count; ++trial, ++index) {
            SweepRow entry;
            entry.n_total = n;
            entry.seed = config.base_seed + index;
            try {
                entry.row = run_trial(config, n, entry.seed);
            } catch (const std::exception& e) {
                entry.error = e.what();
            }
            rows.push_back(std::move(entry));
        }
    }
    return rows;
}

BandReport band_check(std::span<const TrialRow> rows, double band) {
    if (rows.empty()) throw std::domain_error("band_check: no rows");
    BandReport report;
    int within = 0;
    for (const auto& row : rows) {
        const double deviation = std::abs(row.q - 1.0);
        report.max_deviation = std::max(report.max_deviation, deviation);
        if (deviation <= band) ++within;
    }
    report.pass_fraction = static_cast<double>(within) / static_cast<double>(rows.size());
    return report;
}

void emit_csv(std::span<const TrialRow> rows, std::ostream& out) {
    out << "area,n_total,n_clusterhead,n_normal,e_total,e_clusterhead,e_normal,q,seed\n";
    char buf[256];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%.9g,%.9g,%.9g,%.9g,%llu\n",
                      row.area.c_str(), row.n_total, row.n_ch, row.n_normal, row.e_total,
                      row.e_ch, row.e_normal, row.q,
                      static_cast<unsigned long long>(row.seed));
        out << buf;
    }
}

std::string csv_string(std::span<const TrialRow> rows) {
    std::ostringstream out;
    emit_csv(rows, out);
    return out.str();
}

} // namespace wsnq::harness
