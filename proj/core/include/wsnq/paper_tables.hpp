#pragma once

#include <array>
#include <vector>

#include "wsnq/protocols.hpp"
#include "wsnq/statmech.hpp"

namespace wsnq::harness {

/// One published row, transcribed verbatim. A few rows are internally
/// inconsistent (n_ch + n_normal != n_total); they are kept as printed.
struct PaperRow {
    int n_total;
    int n_ch;
    int n_normal;
    double e_total;
    double e_ch;
    double e_normal;
    double q;
    // Resolution of the printed E_Total column; most rows carry six decimals.
    double e_total_quantum = 1e-6;

    statmech::ClassStats stats() const {
        return {static_cast<double>(n_total), static_cast<double>(n_ch),
                static_cast<double>(n_normal), e_total, e_ch, e_normal};
    }
};

struct PaperTable {
    protocols::ProtocolKind label;
    double band; // published tolerance on |Q - 1|
    std::vector<PaperRow> rows;
};

/// The three published datasets (9 rows each, test area 300x300).
const std::array<PaperTable, 3>& paper_tables();

struct TableRowReport {
    protocols::ProtocolKind table;
    int n_total;
    double eq5_q;        // ratio recomputed from the row's own N and E entries
    double reciprocal_q; // 1/eq5_q, the orientation the printed column uses
    double printed_q;
    double relative_error; // |reciprocal_q - printed_q| / printed_q
    bool within;
};

struct TableValidation {
    std::vector<TableRowReport> rows;
    double max_relative_error = 0.0;
    bool pass = false;
};

TableValidation validate_paper_tables(double tolerance = 5e-3);

} // namespace wsnq::harness
