#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wsnq/deploy.hpp"
#include "wsnq/protocols.hpp"
#include "wsnq/statmech.hpp"

namespace wsnq::harness {

struct ExperimentConfig {
    DeploymentConfig deployment; // template: n_nodes and seed are overridden per trial
    protocols::ProtocolConfig protocol;
    RadioParams radio;
    std::vector<int> node_counts = {20, 30, 40, 50, 60, 70, 80, 90, 100};
    int trials_per_count = 1;
    std::uint64_t base_seed = 42;
};

/// One Table-I-shaped record plus the seed that reproduces it.
struct TrialRow {
    std::string area;
    int n_total = 0;
    int n_ch = 0;
    int n_normal = 0;
    double e_total = 0.0;
    double e_ch = 0.0;
    double e_normal = 0.0;
    double q = 0.0; // q_factor(TableConvention) of this row's stats
    std::uint64_t seed = 0;
};

/// Sweep entry: either a row or the reason the trial failed.
struct SweepRow {
    std::optional<TrialRow> row;
    std::string error;
    int n_total = 0;
    std::uint64_t seed = 0;

    bool ok() const { return row.has_value(); }
};

/// Class means of consumed energy. e_total = (e_ch + e_normal)/2, the
/// convention every printed table row satisfies; set weighted_total for the
/// node-count-weighted mean instead.
statmech::ClassStats class_stats(const protocols::ProtocolOutcome& outcome,
                                 bool weighted_total = false);

TrialRow run_trial(const ExperimentConfig& config, int n, std::uint64_t seed);

/// Rows for node_counts x trials, seeds base_seed + running index, emitted in
/// deterministic order (node count ascending, trial index ascending). Trial
/// failures become error rows; the sweep continues.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config);

struct BandReport {
    double pass_fraction = 0.0;
    double max_deviation = 0.0;
};

/// Fraction of rows with |q - 1| within the band, and the worst deviation.
BandReport band_check(std::span<const TrialRow> rows, double band);

/// CSV with the contracted header; energies at 9 significant digits, LF line
/// endings, byte-identical for identical inputs.
void emit_csv(std::span<const TrialRow> rows, std::ostream& out);
std::string csv_string(std::span<const TrialRow> rows);

} // namespace wsnq::harness
