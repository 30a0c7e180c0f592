#pragma once

#include <cmath>
#include <stdexcept>

namespace fdas {

/// Link-level operating point shared by every trial of a run.  All values
/// are linear (not dB); noise power is normalized to 1, so `gamma0_*` are
/// the transmit SNRs and `eta` is the residual self-interference factor
/// left after cancellation (0 = perfect cancellation).
template <class Scalar = double>
struct LinkBudget {
  Scalar gamma0_dl{};
  Scalar gamma0_ul{};
  Scalar eta{};
  Scalar gamma_t_dl{};
  Scalar gamma_t_ul{};
};

namespace detail {

template <class Scalar>
void require_budget(const LinkBudget<Scalar>& b) {
  const bool ok = b.gamma0_dl >= Scalar(0) && b.gamma0_ul >= Scalar(0) &&
                  b.eta >= Scalar(0) && b.eta <= Scalar(1) &&
                  b.gamma_t_dl >= Scalar(0) && b.gamma_t_ul >= Scalar(0) &&
                  std::isfinite(double(b.gamma0_dl)) &&
                  std::isfinite(double(b.gamma0_ul)) &&
                  std::isfinite(double(b.gamma_t_dl)) &&
                  std::isfinite(double(b.gamma_t_ul));
  if (!ok) {
    throw std::invalid_argument(
        "link budget: SNRs and thresholds must be finite and >= 0, eta in "
        "[0, 1]");
  }
}

}  // namespace detail

/// Downlink SINR; the downlink sees no self-interference, so this is plain
/// SNR times the selected channel gain.
template <class Scalar>
Scalar sinr_dl(const LinkBudget<Scalar>& budget, Scalar dl_gain) {
  detail::require_budget(budget);
  if (!(dl_gain >= Scalar(0))) {
    throw std::invalid_argument("sinr_dl: gain must be >= 0");
  }
  return budget.gamma0_dl * dl_gain;
}

/// Uplink SINR with residual self-interference from the simultaneous
/// downlink transmission: gamma0 * g / (1 + eta * gamma0_dl * a).
template <class Scalar>
Scalar sinr_ul(const LinkBudget<Scalar>& budget, Scalar ul_gain,
               Scalar self_gain) {
  detail::require_budget(budget);
  if (!(ul_gain >= Scalar(0)) || !(self_gain >= Scalar(0))) {
    throw std::invalid_argument("sinr_ul: gains must be >= 0");
  }
  return budget.gamma0_ul * ul_gain /
         (Scalar(1) + budget.eta * budget.gamma0_dl * self_gain);
}

/// An outage is a strict shortfall of the instantaneous SINR.
template <class Scalar>
bool outage_indicator(Scalar sinr, Scalar threshold) {
  if (!(sinr >= Scalar(0)) || !(threshold >= Scalar(0))) {
    throw std::invalid_argument(
        "outage_indicator: SINR and threshold must be >= 0");
  }
  return sinr < threshold;
}

/// Rate served to a user whose SINR meets the threshold: log2(1 + gamma_t).
template <class Scalar>
Scalar outage_capacity(Scalar gamma_t) {
  if (!(gamma_t >= Scalar(0)) || !std::isfinite(double(gamma_t))) {
    throw std::invalid_argument(
        "outage_capacity: threshold must be finite and >= 0");
  }
  return std::log2(Scalar(1) + gamma_t);
}

/// Sum throughput of the full-duplex link: each direction contributes its
/// outage capacity scaled by the probability of not being in outage.
template <class Scalar>
Scalar sum_throughput(Scalar c_d, Scalar c_u, Scalar p_od, Scalar p_ou) {
  const bool probs_ok = p_od >= Scalar(0) && p_od <= Scalar(1) &&
                        p_ou >= Scalar(0) && p_ou <= Scalar(1);
  if (!probs_ok || !(c_d >= Scalar(0)) || !(c_u >= Scalar(0))) {
    throw std::invalid_argument(
        "sum_throughput: capacities must be >= 0 and probabilities in [0, 1]");
  }
  return c_d * (Scalar(1) - p_od) + c_u * (Scalar(1) - p_ou);
}

}  // namespace fdas
