// Command-line front end: deployment dumps, single runs, seeded sweeps,
// published-table validation and the max-ent self-check suite.
//
// Exit codes: 0 success, 1 validation/invariant failure, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "wsnq/config.hpp"
#include "wsnq/errors.hpp"
#include "wsnq/paper_tables.hpp"
#include "wsnq/selfcheck.hpp"
#include "wsnq/topology.hpp"

namespace {

struct Cli {
    std::string config_path;
    bool print_config = false;
    std::vector<std::pair<std::string, std::string>> overrides;
};

wsnq::CliConfig load_config(const Cli& cli) {
    if (!cli.config_path.empty()) {
        std::ifstream file(cli.config_path);
        if (!file) throw wsnq::ConfigError(0, "cannot open config file '" + cli.config_path + "'");
        return wsnq::parse_config(file, cli.overrides);
    }
    std::istringstream empty;
    return wsnq::parse_config(empty, cli.overrides);
}

int cmd_deploy(const wsnq::CliConfig& config) {
    const auto nodes = wsnq::deploy(config.deployment());
    std::printf("id,x,y\n");
    for (const auto& node : nodes)
        std::printf("%d,%.9g,%.9g\n", node.id, node.position.x, node.position.y);
    return 0;
}

int cmd_run(const wsnq::CliConfig& config) {
    const auto row = wsnq::harness::run_trial(config.experiment(), config.n_nodes, config.seed);
    const wsnq::harness::TrialRow rows[] = {row};
    wsnq::harness::emit_csv(rows, std::cout);
    return 0;
}

int cmd_sweep(const wsnq::CliConfig& config) {
    const auto sweep = wsnq::harness::run_sweep(config.experiment());
    std::vector<wsnq::harness::TrialRow> rows;
    for (const auto& entry : sweep) {
        if (entry.ok()) {
            rows.push_back(*entry.row);
        } else {
            std::fprintf(stderr, "trial n=%d seed=%llu failed: %s\n", entry.n_total,
                         static_cast<unsigned long long>(entry.seed), entry.error.c_str());
        }
    }
    if (config.output_path.empty()) {
        wsnq::harness::emit_csv(rows, std::cout);
    } else {
        std::ofstream out(config.output_path, std::ios::binary);
        if (!out) throw wsnq::ConfigError(0, "cannot open output file '" + config.output_path + "'");
        wsnq::harness::emit_csv(rows, out);
    }
    return 0;
}

int cmd_validate_tables() {
    const auto validation = wsnq::harness::validate_paper_tables();
    for (const auto& row : validation.rows) {
        std::printf("%-10s N=%-3d eq5=%.6f reciprocal=%.6f printed=%.6f rel_err=%.2e %s\n",
                    wsnq::protocol_name(row.table), row.n_total, row.eq5_q, row.reciprocal_q,
                    row.printed_q, row.relative_error, row.within ? "ok" : "OUT");
    }
    std::printf("max relative error %.3e -> %s\n", validation.max_relative_error,
                validation.pass ? "PASS" : "FAIL");
    return validation.pass ? 0 : 1;
}

int cmd_maxent_check() {
    const auto report = wsnq::selfcheck::run_maxent_checks();
    for (const auto& line : report.lines) std::printf("%s\n", line.c_str());
    std::printf("%s\n", report.all_pass ? "PASS" : "FAIL");
    return report.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic WSN topology-control simulator and NE^2-conservation checker"};
    app.require_subcommand(1);

    Cli cli;
    app.add_option("--config", cli.config_path, "key = value configuration file");
    app.add_flag("--print-config", cli.print_config, "print the effective configuration and exit");

    // Every config key is also a flag; flags override file values.
    static const char* keys[] = {
        "area_width", "area_height", "n_nodes", "comm_radius", "initial_energy_j",
        "alpha0", "beta1", "msg_bits", "protocol", "rule_k", "a3_energy_weight",
        "reception_charging", "seed", "node_counts", "trials", "output_path"};
    for (const char* key : keys) {
        app.add_option_function<std::string>(
            std::string("--") + key,
            [&cli, key](const std::string& value) { cli.overrides.emplace_back(key, value); },
            std::string("override ") + key);
    }

    auto* deploy_cmd = app.add_subcommand("deploy", "print node positions as CSV");
    auto* run_cmd = app.add_subcommand("run", "run one trial and print its row");
    auto* sweep_cmd = app.add_subcommand("sweep", "run the full seeded sweep");
    auto* validate_cmd = app.add_subcommand("validate-tables", "recompute Q for the published tables");
    auto* maxent_cmd = app.add_subcommand("maxent-check", "run the max-ent invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const wsnq::CliConfig config = load_config(cli);
        if (cli.print_config) {
            std::fputs(config.to_text().c_str(), stdout);
            return 0;
        }
        if (deploy_cmd->parsed()) return cmd_deploy(config);
        if (run_cmd->parsed()) return cmd_run(config);
        if (sweep_cmd->parsed()) return cmd_sweep(config);
        if (validate_cmd->parsed()) return cmd_validate_tables();
        if (maxent_cmd->parsed()) return cmd_maxent_check();
        return 2;
    } catch (const wsnq::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
