#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fdas/types.hpp"

namespace fdas {

/// Gain scale on which the multi-objective criteria mix the three links.
/// `amplitude` scores the Rayleigh envelopes (square roots of the power
/// gains), which keeps the desired-link and loopback terms commensurate and
/// is the default; `power` scores the raw squared-envelope gains.
/// The SINR model always uses power gains — this knob only shapes the
/// selection objective.
enum class GainDomain { amplitude, power };

enum class StrategyKind { mm_as, li_as, mo_ws, mo_ewc };

/// A fully specified selection rule.  `weight` (w) and `domain` apply to the
/// multi-objective kinds; `sharpness` (p) applies to mo_ewc only.
struct Strategy {
  StrategyKind kind = StrategyKind::mm_as;
  double weight = 0.0;
  double sharpness = 1.0;
  GainDomain domain = GainDomain::amplitude;
};

/// Outcome of applying a selection rule to one channel realization.
/// The gains are exactly the realization entries at (rx_index, tx_index),
/// on the power scale regardless of the scoring domain.
template <class Scalar = double>
struct Selection {
  Index rx_index = 0;
  Index tx_index = 0;
  Scalar dl_gain{};
  Scalar ul_gain{};
  Scalar self_gain{};
  Scalar objective{};
};

namespace detail {

template <class Scalar>
void require_nonempty(const ChannelRealization<Scalar>& real) {
  if (real.tx_count() < 1 || real.rx_count() < 1 ||
      real.self_gains.rows() != real.rx_count() ||
      real.self_gains.cols() != real.tx_count()) {
    throw std::invalid_argument(
        "selection: realization must have >= 1 antenna per side and a "
        "matching loopback matrix");
  }
}

template <class Scalar>
void require_weight(Scalar w) {
  if (!(w >= Scalar(0)) || !(w <= Scalar(1))) {
    throw std::invalid_argument("selection: weight w must lie in [0, 1]");
  }
}

template <class Scalar>
void require_sharpness(Scalar p) {
  if (!(p > Scalar(0)) || !std::isfinite(double(p))) {
    throw std::invalid_argument("selection: sharpness p must be finite and > 0");
  }
}

/// First maximal index under strict >, i.e. ties keep the lowest index.
template <class Derived>
Index argmax_first(const Eigen::MatrixBase<Derived>& v) {
  Index best = 0;
  for (Index k = 1; k < v.size(); ++k) {
    if (v[k] > v[best]) best = k;
  }
  return best;
}

template <class Scalar>
Scalar to_domain(Scalar power_gain, GainDomain domain) {
  return domain == GainDomain::amplitude ? std::sqrt(power_gain) : power_gain;
}

/// Scans all (receive, transmit) pairs in row-first order and keeps the
/// strictly smallest score, so ties resolve to the lowest receive index and
/// then the lowest transmit index.  `score(i, j)` is invoked exactly once
/// per pair.
template <class Scalar, class ScoreFn>
Selection<Scalar> argmin_pairs(const ChannelRealization<Scalar>& real,
                               ScoreFn&& score) {
  Selection<Scalar> sel;
  Scalar best = score(Index(0), Index(0));
  for (Index i = 0; i < real.rx_count(); ++i) {
    for (Index j = 0; j < real.tx_count(); ++j) {
      if (i == 0 && j == 0) continue;
      const Scalar s = score(i, j);
      if (s < best) {
        best = s;
        sel.rx_index = i;
        sel.tx_index = j;
      }
    }
  }
  sel.dl_gain = real.dl_gains[sel.tx_index];
  sel.ul_gain = real.ul_gains[sel.rx_index];
  sel.self_gain = real.self_gains(sel.rx_index, sel.tx_index);
  sel.objective = best;
  return sel;
}

}  // namespace detail

/// Max-gain selection: pick the transmit antenna with the largest downlink
/// gain and, independently, the receive antenna with the largest uplink
/// gain.  Ignores the loopback channel entirely.
template <class Scalar>
Selection<Scalar> select_mm(const ChannelRealization<Scalar>& real) {
  detail::require_nonempty(real);
  Selection<Scalar> sel;
  sel.tx_index = detail::argmax_first(real.dl_gains);
  sel.rx_index = detail::argmax_first(real.ul_gains);
  sel.dl_gain = real.dl_gains[sel.tx_index];
  sel.ul_gain = real.ul_gains[sel.rx_index];
  sel.self_gain = real.self_gains(sel.rx_index, sel.tx_index);
  sel.objective = -(sel.dl_gain + sel.ul_gain) / Scalar(2);
  return sel;
}

/// Least-interference selection: pick the pair with the smallest loopback
/// gain, ignoring the desired links.
template <class Scalar>
Selection<Scalar> select_li(const ChannelRealization<Scalar>& real) {
  detail::require_nonempty(real);
  return detail::argmin_pairs(real, [&](Index i, Index j) {
    return real.self_gains(i, j);
  });
}

/// Weighted-sum scalarization of (-downlink, -uplink, loopback) with weights
/// ((1-w)/2, (1-w)/2, w):
///
///   f(i, j) = -(1-w)/2 * (T(h_j) + T(g_i)) + w * T(a_ij)
///
/// where T maps the power gains into the scoring domain.  w = 0 reduces to
/// max-gain selection and w = 1 to least-interference selection, including
/// identical tie resolution.
template <class Scalar>
Selection<Scalar> select_mo_ws(const ChannelRealization<Scalar>& real, Scalar w,
                               GainDomain domain = GainDomain::amplitude) {
  detail::require_nonempty(real);
  detail::require_weight(w);
  const Scalar c = (Scalar(1) - w) / Scalar(2);
  return detail::argmin_pairs(real, [&](Index i, Index j) {
    const Scalar tu = detail::to_domain(real.ul_gains[i], domain);
    const Scalar td = detail::to_domain(real.dl_gains[j], domain);
    const Scalar tl = detail::to_domain(real.self_gains(i, j), domain);
    return -c * (td + tu) + w * tl;
  });
}

/// Exponentially weighted criterion over the same three objectives:
///
///   F(i, j) = sum_k (e^{p w_k} - 1) e^{p f_k},   f = (-T(h_j), -T(g_i), T(a_ij))
///
/// with weights ((1-w)/2, (1-w)/2, w).  Larger p penalizes the worst
/// objective harder; as with the weighted sum, w = 0 and w = 1 reduce
/// exactly to the single-objective rules.
template <class Scalar>
Selection<Scalar> select_mo_ewc(const ChannelRealization<Scalar>& real,
                                Scalar w, Scalar p,
                                GainDomain domain = GainDomain::amplitude) {
  detail::require_nonempty(real);
  detail::require_weight(w);
  detail::require_sharpness(p);
  const Scalar c_link = std::exp(p * (Scalar(1) - w) / Scalar(2)) - Scalar(1);
  const Scalar c_loop = std::exp(p * w) - Scalar(1);
  return detail::argmin_pairs(real, [&](Index i, Index j) {
    const Scalar tu = detail::to_domain(real.ul_gains[i], domain);
    const Scalar td = detail::to_domain(real.dl_gains[j], domain);
    const Scalar tl = detail::to_domain(real.self_gains(i, j), domain);
    return c_link * (std::exp(-p * td) + std::exp(-p * tu)) +
           c_loop * std::exp(p * tl);
  });
}

/// Dispatch on a runtime strategy description.
template <class Scalar>
Selection<Scalar> apply_strategy(const Strategy& strategy,
                                 const ChannelRealization<Scalar>& real) {
  switch (strategy.kind) {
    case StrategyKind::mm_as:
      return select_mm(real);
    case StrategyKind::li_as:
      return select_li(real);
    case StrategyKind::mo_ws:
      return select_mo_ws(real, Scalar(strategy.weight), strategy.domain);
    case StrategyKind::mo_ewc:
      return select_mo_ewc(real, Scalar(strategy.weight),
                           Scalar(strategy.sharpness), strategy.domain);
  }
  throw std::invalid_argument("apply_strategy: unknown strategy kind");
}

/// Rule of thumb for the loopback weight as a function of the residual
/// self-interference factor (linear) and the transmit SNR (dB):
///
///   w = clamp(0.5 * eta^0.301 + 0.02 * snr_db - 0.3, 0, 1)
///
/// Stronger residual self-interference and higher SNR both shift the
/// emphasis toward suppressing the loopback path.
inline double empirical_weight(double eta_linear, double snr_db) {
  if (!(eta_linear > 0.0) || !std::isfinite(eta_linear) ||
      !std::isfinite(snr_db)) {
    throw std::invalid_argument(
        "empirical_weight: eta_linear must be > 0 and inputs finite");
  }
  const double raw = 0.5 * std::pow(eta_linear, 0.301) + 0.02 * snr_db - 0.3;
  return std::clamp(raw, 0.0, 1.0);
}

}  // namespace fdas
