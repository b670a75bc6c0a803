#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "wsnq/harness.hpp"

namespace wsnq {

/// Flat key = value configuration mirroring a simulator options panel.
/// Unknown keys are rejected; every value is validated as it is set.
struct CliConfig {
    double area_width = 300.0;
    double area_height = 300.0;
    int n_nodes = 50;
    double comm_radius = 100.0;
    double initial_energy_j = 1.0;
    double alpha0 = 5e-8;
    double beta1 = 1e-10;
    double msg_bits = 1000.0;
    protocols::ProtocolKind protocol = protocols::ProtocolKind::CdsRuleK;
    int rule_k = 2;
    double a3_energy_weight = 0.5;
    bool reception_charging = false;
    std::uint64_t seed = 42;
    std::vector<int> node_counts = {20, 30, 40, 50, 60, 70, 80, 90, 100};
    int trials = 10;
    std::string output_path; // empty = stdout

    DeploymentConfig deployment() const;
    RadioParams radio() const;
    protocols::ProtocolConfig protocol_config() const;
    harness::ExperimentConfig experiment() const;

    /// The full configuration back in `key = value` form.
    std::string to_text() const;
};

/// Set one key. Throws ConfigError (carrying `line`, 0 for a flag override)
/// on unknown keys or malformed/out-of-range values.
void apply_setting(CliConfig& config, const std::string& key, const std::string& value, int line);

/// Parse `key = value` text (# comments, blank lines allowed), then apply the
/// flag overrides on top of it. Precedence: flags > file > defaults.
CliConfig parse_config(std::istream& file,
                       const std::vector<std::pair<std::string, std::string>>& overrides = {});

const char* protocol_name(protocols::ProtocolKind kind);

} // namespace wsnq
