#include "fdas/table.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace fdas {

void append_row(OutputTable& table, std::vector<double> row) {
  if (row.size() != table.columns.size()) {
    throw std::logic_error("table row width does not match the header");
  }
  table.rows.push_back(std::move(row));
}

std::string format_cell(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string to_csv(const OutputTable& table) {
  if (table.provenance.empty()) {
    throw std::logic_error("table has no provenance block");
  }
  std::string out;
  for (const auto& [key, value] : table.provenance) {
    out += "# " + key + "=" + value + "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out += (c ? "," : "") + table.columns[c];
  }
  out += "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::logic_error("table row width does not match the header");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += format_cell(row[c]);
    }
    out += "\n";
  }
  return out;
}

namespace {

std::string gain_domain_token(GainDomain domain) {
  return domain == GainDomain::amplitude ? "amp" : "power";
}

/// Shared head of every provenance block; keeps key order fixed so repeated
/// runs serialize byte-identically.
std::vector<std::pair<std::string, std::string>> base_provenance(
    const std::string& command, const SimConfig& config) {
  return {
      {"version", FDAS_VERSION},
      {"schema-version", "1"},
      {"command", command},
      {"mt", std::to_string(config.m_t)},
      {"mr", std::to_string(config.m_r)},
      {"snr-db", format_cell(config.snr_db)},
      {"eta-db", format_cell(config.eta_db)},
      {"gamma-t-db", format_cell(config.gamma_t_dl_db)},
      {"gamma-t-ul-db", format_cell(config.gamma_t_ul_db)},
      {"samples", std::to_string(config.n_samples)},
      {"seed", std::to_string(config.seed)},
  };
}

std::string column_prefix(const std::string& label) {
  std::string prefix;
  for (char ch : label) {
    prefix +=
        (ch == '-') ? '_' : char(std::tolower(static_cast<unsigned char>(ch)));
  }
  return prefix;
}

}  // namespace

OutputTable make_run_table(const SimConfig& config,
                           const ThroughputEstimate& est) {
  OutputTable table;
  table.provenance = base_provenance("run", config);
  table.provenance.emplace_back("strategy",
                                strategy_token(config.strategy.kind));
  table.provenance.emplace_back("w", format_cell(config.strategy.weight));
  table.provenance.emplace_back("p", format_cell(config.strategy.sharpness));
  table.provenance.emplace_back("mo-gain",
                                gain_domain_token(config.strategy.domain));
  table.columns = {"p_od", "p_ou", "outage_dl", "outage_ul", "c_d",
                   "c_u",  "c_t",  "se_dl",     "se_ul"};
  append_row(table,
             {est.p_od_hat, est.p_ou_hat, double(est.outage_count_dl),
              double(est.outage_count_ul), est.c_d, est.c_u, est.c_t,
              est.se_dl, est.se_ul});
  return table;
}

OutputTable make_sweep_table(
    const std::string& command, const std::string& x_column,
    const SimConfig& base, const SweepResult& sweep,
    const std::vector<std::pair<std::string, std::string>>& extra) {
  OutputTable table;
  table.provenance = base_provenance(command, base);
  table.provenance.emplace_back("mo-gain",
                                gain_domain_token(base.strategy.domain));
  for (const auto& kv : extra) table.provenance.push_back(kv);

  table.columns = {x_column};
  for (const std::string& label : sweep.labels) {
    const std::string prefix = column_prefix(label);
    for (const char* field : {"c_t", "p_od", "p_ou", "se_dl", "se_ul"}) {
      table.columns.push_back(prefix + "_" + field);
    }
  }
  for (std::size_t r = 0; r < sweep.x.size(); ++r) {
    std::vector<double> row = {sweep.x[r]};
    for (const ThroughputEstimate& est : sweep.estimates[r]) {
      row.insert(row.end(),
                 {est.c_t, est.p_od_hat, est.p_ou_hat, est.se_dl, est.se_ul});
    }
    append_row(table, std::move(row));
  }
  return table;
}

}  // namespace fdas
