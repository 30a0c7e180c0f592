#include "fdas/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "fdas/channel.hpp"

namespace fdas {

void validate(const SimConfig& config) {
  std::vector<std::string> bad;
  if (config.m_t < 1) bad.push_back("mt");
  if (config.m_r < 1) bad.push_back("mr");
  if (!std::isfinite(config.snr_db)) bad.push_back("snr-db");
  if (!std::isfinite(config.eta_db) || config.eta_db > 0.0)
    bad.push_back("eta-db");
  if (!std::isfinite(config.gamma_t_dl_db)) bad.push_back("gamma-t-db");
  if (!std::isfinite(config.gamma_t_ul_db)) bad.push_back("gamma-t-ul-db");
  if (config.n_samples < 1) bad.push_back("samples");
  const bool is_mo = config.strategy.kind == StrategyKind::mo_ws ||
                     config.strategy.kind == StrategyKind::mo_ewc;
  if (is_mo && !(config.strategy.weight >= 0.0 && config.strategy.weight <= 1.0))
    bad.push_back("w");
  if (config.strategy.kind == StrategyKind::mo_ewc &&
      !(config.strategy.sharpness > 0.0 &&
        std::isfinite(config.strategy.sharpness)))
    bad.push_back("p");
  if (!bad.empty()) {
    std::string msg = "invalid configuration field(s):";
    for (const auto& f : bad) msg += " " + f;
    throw ConfigError(msg, std::move(bad));
  }
}

LinkBudget<double> make_budget(const SimConfig& config) {
  LinkBudget<double> budget;
  budget.gamma0_dl = db_to_linear(config.snr_db);
  budget.gamma0_ul = db_to_linear(config.snr_db);
  budget.eta = db_to_linear(config.eta_db);
  budget.gamma_t_dl = db_to_linear(config.gamma_t_dl_db);
  budget.gamma_t_ul = db_to_linear(config.gamma_t_ul_db);
  return budget;
}

double throughput_se(const ThroughputEstimate& est) {
  return est.c_d * est.se_dl + est.c_u * est.se_ul;
}

namespace {

struct OutageCounts {
  std::int64_t dl = 0;
  std::int64_t ul = 0;
};

/// Counts outages for every strategy over trials [first, last).
void count_outages(const SimConfig& config, const LinkBudget<double>& budget,
                   const std::vector<Strategy>& strategies, std::int64_t first,
                   std::int64_t last, std::vector<OutageCounts>& counts) {
  ChannelRealization<double> real;
  real.dl_gains.resize(config.m_t);
  real.ul_gains.resize(config.m_r);
  real.self_gains.resize(config.m_r, config.m_t);
  for (std::int64_t t = first; t < last; ++t) {
    TrialStream stream(config.seed, static_cast<std::uint64_t>(t));
    sample_channel(stream, real);
    for (std::size_t s = 0; s < strategies.size(); ++s) {
      const Selection<double> sel = apply_strategy(strategies[s], real);
      if (sinr_dl(budget, sel.dl_gain) < budget.gamma_t_dl) ++counts[s].dl;
      if (sinr_ul(budget, sel.ul_gain, sel.self_gain) < budget.gamma_t_ul)
        ++counts[s].ul;
    }
  }
}

ThroughputEstimate estimate_from_counts(const OutageCounts& counts,
                                        std::int64_t n,
                                        const LinkBudget<double>& budget) {
  ThroughputEstimate est;
  est.outage_count_dl = counts.dl;
  est.outage_count_ul = counts.ul;
  est.p_od_hat = double(counts.dl) / double(n);
  est.p_ou_hat = double(counts.ul) / double(n);
  est.c_d = outage_capacity(budget.gamma_t_dl);
  est.c_u = outage_capacity(budget.gamma_t_ul);
  est.c_t = sum_throughput(est.c_d, est.c_u, est.p_od_hat, est.p_ou_hat);
  est.se_dl = std::sqrt(est.p_od_hat * (1.0 - est.p_od_hat) / double(n));
  est.se_ul = std::sqrt(est.p_ou_hat * (1.0 - est.p_ou_hat) / double(n));
  return est;
}

void validate_strategies(const SimConfig& base,
                         const std::vector<Strategy>& strategies) {
  for (const Strategy& s : strategies) {
    SimConfig probe = base;
    probe.strategy = s;
    validate(probe);
  }
}

}  // namespace

std::vector<ThroughputEstimate> run_trials_multi(
    const SimConfig& config, const std::vector<Strategy>& strategies,
    int workers) {
  validate(config);
  validate_strategies(config, strategies);
  if (strategies.empty()) return {};

  const LinkBudget<double> budget = make_budget(config);
  const std::int64_t n = config.n_samples;
  const int used = static_cast<int>(
      std::max<std::int64_t>(1, std::min<std::int64_t>(workers, n)));

  // Each worker owns a disjoint trial range and its own counters; integer
  // sums make the reduction independent of the partition.
  std::vector<std::vector<OutageCounts>> partial(
      used, std::vector<OutageCounts>(strategies.size()));
  if (used == 1) {
    count_outages(config, budget, strategies, 0, n, partial[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (int k = 0; k < used; ++k) {
      const std::int64_t first = n * k / used;
      const std::int64_t last = n * (k + 1) / used;
      pool.emplace_back([&, k, first, last] {
        count_outages(config, budget, strategies, first, last, partial[k]);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<ThroughputEstimate> out(strategies.size());
  for (std::size_t s = 0; s < strategies.size(); ++s) {
    OutageCounts total;
    for (int k = 0; k < used; ++k) {
      total.dl += partial[k][s].dl;
      total.ul += partial[k][s].ul;
    }
    out[s] = estimate_from_counts(total, n, budget);
  }
  return out;
}

ThroughputEstimate run_trials(const SimConfig& config, int workers) {
  return run_trials_multi(config, {config.strategy}, workers)[0];
}

namespace {

Strategy mo_strategy(const SimConfig& base, double w) {
  Strategy s = base.strategy;
  if (s.kind != StrategyKind::mo_ws && s.kind != StrategyKind::mo_ewc) {
    throw ConfigError("sweep: strategy must be mo-ws or mo-ewc", {"strategy"});
  }
  s.weight = w;
  return s;
}

}  // namespace

SweepResult sweep_weight(const SimConfig& base,
                         const std::vector<double>& w_grid, int workers) {
  if (w_grid.empty()) {
    throw ConfigError("sweep-w: empty weight grid", {"w-grid"});
  }
  // One pass over the trials evaluates MM-AS, LI-AS and every grid weight
  // on shared realizations.
  std::vector<Strategy> strategies = {Strategy{StrategyKind::mm_as, 0, 1,
                                               base.strategy.domain},
                                      Strategy{StrategyKind::li_as, 0, 1,
                                               base.strategy.domain}};
  for (double w : w_grid) strategies.push_back(mo_strategy(base, w));

  const std::vector<ThroughputEstimate> est =
      run_trials_multi(base, strategies, workers);

  SweepResult sweep;
  sweep.labels = {strategy_label(StrategyKind::mm_as),
                  strategy_label(StrategyKind::li_as),
                  strategy_label(base.strategy.kind)};
  sweep.x = w_grid;
  sweep.estimates.reserve(w_grid.size());
  for (std::size_t r = 0; r < w_grid.size(); ++r) {
    sweep.estimates.push_back({est[0], est[1], est[2 + r]});
  }
  return sweep;
}

SweepResult sweep_snr(const SimConfig& base,
                      const std::vector<double>& snr_grid_db, bool auto_weight,
                      int workers) {
  if (snr_grid_db.empty()) {
    throw ConfigError("sweep-snr: empty SNR grid", {"snr-grid"});
  }
  const double eta = db_to_linear(base.eta_db);

  SweepResult sweep;
  sweep.labels = {strategy_label(StrategyKind::mm_as),
                  strategy_label(StrategyKind::li_as),
                  strategy_label(base.strategy.kind)};
  sweep.x = snr_grid_db;
  sweep.estimates.reserve(snr_grid_db.size());
  for (double snr_db : snr_grid_db) {
    SimConfig point = base;
    point.snr_db = snr_db;
    const double w =
        auto_weight ? empirical_weight(eta, snr_db) : base.strategy.weight;
    const std::vector<Strategy> strategies = {
        Strategy{StrategyKind::mm_as, 0, 1, base.strategy.domain},
        Strategy{StrategyKind::li_as, 0, 1, base.strategy.domain},
        mo_strategy(point, w)};
    sweep.estimates.push_back(run_trials_multi(point, strategies, workers));
  }
  return sweep;
}

std::string strategy_token(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::mm_as:
      return "mm";
    case StrategyKind::li_as:
      return "li";
    case StrategyKind::mo_ws:
      return "mo-ws";
    case StrategyKind::mo_ewc:
      return "mo-ewc";
  }
  return "?";
}

std::string strategy_label(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::mm_as:
      return "MM-AS";
    case StrategyKind::li_as:
      return "LI-AS";
    case StrategyKind::mo_ws:
      return "MO-WS";
    case StrategyKind::mo_ewc:
      return "MO-EWC";
  }
  return "?";
}

StrategyKind parse_strategy_kind(const std::string& token) {
  if (token == "mm") return StrategyKind::mm_as;
  if (token == "li") return StrategyKind::li_as;
  if (token == "mo-ws") return StrategyKind::mo_ws;
  if (token == "mo-ewc") return StrategyKind::mo_ewc;
  throw ConfigError("unknown strategy '" + token +
                        "' (expected mm, li, mo-ws or mo-ewc)",
                    {"strategy"});
}

}  // namespace fdas
