#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fdas/montecarlo.hpp"

namespace fdas {

/// Rectangular result table with a provenance block.  Every table carries
/// the provenance needed to reproduce it (tool version, schema version,
/// command, full configuration, seed); the CSV writer refuses tables
/// without one.  Cell values are doubles; integer-valued cells (counts)
/// print without a fraction under the fixed %.6g format.
struct OutputTable {
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Appends a row, enforcing the column count.
void append_row(OutputTable& table, std::vector<double> row);

/// Fixed cell format: 6 significant digits, shortest form ("%.6g").
std::string format_cell(double value);

/// Renders the table: '#'-prefixed key=value provenance lines, then the
/// header row, then one comma-separated line per row.  Throws
/// std::logic_error if the provenance block is empty or a row width
/// disagrees with the header — both indicate a bug in the table builder.
std::string to_csv(const OutputTable& table);

/// Single-row table for one estimator run.
OutputTable make_run_table(const SimConfig& config,
                           const ThroughputEstimate& est);

/// Sweep table: column `x_column`, then c_t, p_od, p_ou, se_dl, se_ul per
/// strategy (prefixed with the lower-cased strategy label).  `extra`
/// key=value pairs are appended to the provenance block after the shared
/// configuration keys.
OutputTable make_sweep_table(
    const std::string& command, const std::string& x_column,
    const SimConfig& base, const SweepResult& sweep,
    const std::vector<std::pair<std::string, std::string>>& extra = {});

}  // namespace fdas
