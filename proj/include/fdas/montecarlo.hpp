#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdas/link.hpp"
#include "fdas/selection.hpp"

namespace fdas {

/// Invalid simulation parameters; `fields()` names every offending field so
/// callers can produce precise diagnostics.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& message, std::vector<std::string> fields)
      : std::invalid_argument(message), fields_(std::move(fields)) {}

  const std::vector<std::string>& fields() const { return fields_; }

 private:
  std::vector<std::string> fields_;
};

/// Complete description of one simulation run.  dB quantities are converted
/// once into a LinkBudget; `eta_db <= 0` keeps the residual
/// self-interference factor within (0, 1].  Both directions share the
/// transmit SNR `snr_db`.
struct SimConfig {
  int m_t = 4;
  int m_r = 4;
  double snr_db = 15.0;
  double eta_db = -10.0;
  double gamma_t_dl_db = 10.0;
  double gamma_t_ul_db = 10.0;
  std::int64_t n_samples = 100000;
  std::uint64_t seed = 1;
  Strategy strategy{};
};

/// Throws ConfigError naming every invalid field (config-key spelling:
/// "mt", "mr", "snr-db", "eta-db", "gamma-t-db", "gamma-t-ul-db",
/// "samples", "seed", "w", "p").
void validate(const SimConfig& config);

/// Linear-scale operating point for the run.
LinkBudget<double> make_budget(const SimConfig& config);

/// Monte-Carlo estimate of the outage probabilities and throughput of one
/// selection rule.  Outage counts are kept as integers so that results are
/// bit-for-bit identical for a given (config, seed) regardless of worker
/// count or evaluation order; the derived fields are pure functions of the
/// counts.
struct ThroughputEstimate {
  double p_od_hat = 0.0;
  double p_ou_hat = 0.0;
  std::int64_t outage_count_dl = 0;
  std::int64_t outage_count_ul = 0;
  double c_d = 0.0;
  double c_u = 0.0;
  double c_t = 0.0;
  double se_dl = 0.0;
  double se_ul = 0.0;
};

/// Upper bound on the standard error of c_t implied by the per-direction
/// binomial standard errors (tight when the two outage indicators are fully
/// correlated).
double throughput_se(const ThroughputEstimate& est);

/// Evaluates several selection rules on common random numbers: every trial
/// draws one channel realization from the (seed, trial-index) stream and
/// applies all strategies to it.  Element k of the result is bit-for-bit
/// identical to a standalone run with `config.strategy = strategies[k]` and
/// the same seed.
std::vector<ThroughputEstimate> run_trials_multi(
    const SimConfig& config, const std::vector<Strategy>& strategies,
    int workers = 1);

/// Single-strategy convenience wrapper around run_trials_multi.
ThroughputEstimate run_trials(const SimConfig& config, int workers = 1);

/// One sweep: `labels[s]` names strategy s, `estimates[r][s]` is its
/// estimate at grid point `x[r]`.
struct SweepResult {
  std::vector<std::string> labels;
  std::vector<double> x;
  std::vector<std::vector<ThroughputEstimate>> estimates;
};

/// Sweeps the scalarization weight over `w_grid` at a fixed operating point.
/// Strategies per row: MM-AS, LI-AS, and the multi-objective rule named by
/// `base.strategy.kind` (mo_ws or mo_ewc) with the row's weight.  All rows
/// and strategies share realizations, so the MM-AS and LI-AS columns are
/// exactly constant across the grid.
SweepResult sweep_weight(const SimConfig& base,
                         const std::vector<double>& w_grid, int workers = 1);

/// Sweeps the transmit SNR over `snr_grid_db`.  Strategies per row: MM-AS,
/// LI-AS, and the multi-objective rule from `base.strategy`; when
/// `auto_weight` is set, the weight at each grid point is
/// empirical_weight(eta_linear, snr_db) instead of the fixed
/// `base.strategy.weight`.
SweepResult sweep_snr(const SimConfig& base,
                      const std::vector<double>& snr_grid_db, bool auto_weight,
                      int workers = 1);

/// CLI token for a strategy kind: "mm", "li", "mo-ws", "mo-ewc".
std::string strategy_token(StrategyKind kind);

/// Display label used in tables and plots: "MM-AS", "LI-AS", "MO-WS",
/// "MO-EWC".
std::string strategy_label(StrategyKind kind);

/// Inverse of strategy_token; throws ConfigError naming "strategy" for an
/// unknown token.
StrategyKind parse_strategy_kind(const std::string& token);

}  // namespace fdas
