#pragma once

#include <cmath>
#include <stdexcept>

namespace fdas {

/// Closed-form outage probabilities for the two single-objective selection
/// rules over i.i.d. unit-mean Rayleigh-faded links.  These serve as
/// independent oracles for the Monte-Carlo estimator; everything is on the
/// linear (power) scale.

namespace detail {

inline void require_outage_args(double gamma0, double gamma_t, double eta,
                                int antennas) {
  const bool ok = gamma0 > 0.0 && std::isfinite(gamma0) && gamma_t >= 0.0 &&
                  std::isfinite(gamma_t) && eta >= 0.0 && eta <= 1.0 &&
                  antennas >= 1;
  if (!ok) {
    throw std::invalid_argument(
        "analytic outage: need gamma0 > 0, gamma_t >= 0, eta in [0, 1], "
        "antennas >= 1");
  }
}

/// Exact binomial coefficient for the small orders used here.
inline double binomial(int n, int k) {
  double c = 1.0;
  for (int r = 1; r <= k; ++r) c *= double(n - k + r) / double(r);
  return c;
}

}  // namespace detail

/// Downlink outage of max-gain selection over m_t transmit antennas:
/// the best of m_t i.i.d. exponentials falls short of gamma_t / gamma0.
///
///   p = (1 - e^{-gamma_t / gamma0})^{m_t}
inline double mm_as_dl_outage(double gamma0, double gamma_t, int m_t) {
  detail::require_outage_args(gamma0, gamma_t, 0.0, m_t);
  return std::pow(1.0 - std::exp(-gamma_t / gamma0), m_t);
}

/// Uplink outage of max-gain selection over m_r receive antennas, with the
/// loopback gain of the chosen pair an independent unit-mean exponential:
///
///   p = sum_{k=0}^{m_r} C(m_r, k) (-1)^k e^{-k gamma_t / gamma0}
///                        / (1 + k gamma_t eta)
///
/// The alternating sum is evaluated directly; cancellation stays benign in
/// double precision for m_r <= 16, which covers every configuration used
/// here.
inline double mm_as_ul_outage(double gamma0, double gamma_t, double eta,
                              int m_r) {
  detail::require_outage_args(gamma0, gamma_t, eta, m_r);
  double p = 0.0;
  for (int k = 0; k <= m_r; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    p += sign * detail::binomial(m_r, k) * std::exp(-k * gamma_t / gamma0) /
         (1.0 + k * gamma_t * eta);
  }
  return p;
}

struct OutagePair {
  double dl;
  double ul;
};

/// Outage probabilities of least-interference selection.  The chosen pair's
/// desired-link gains are plain unit-mean exponentials (the rule never looks
/// at them), while the loopback gain is the minimum over n = m_t * m_r
/// i.i.d. exponentials, i.e. exponential with rate n:
///
///   p_dl = 1 - e^{-gamma_t_dl / gamma0}
///   p_ul = 1 - e^{-gamma_t_ul / gamma0} * n / (n + gamma_t_ul * eta)
inline OutagePair li_as_outages(double gamma0, double gamma_t_dl,
                                double gamma_t_ul, double eta, int m_t,
                                int m_r) {
  detail::require_outage_args(gamma0, gamma_t_dl, eta, m_t);
  detail::require_outage_args(gamma0, gamma_t_ul, eta, m_r);
  const double n = double(m_t) * double(m_r);
  OutagePair p;
  p.dl = 1.0 - std::exp(-gamma_t_dl / gamma0);
  p.ul = 1.0 - std::exp(-gamma_t_ul / gamma0) * n / (n + gamma_t_ul * eta);
  return p;
}

}  // namespace fdas
