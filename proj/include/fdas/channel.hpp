#pragma once

#include <cmath>
#include <stdexcept>

#include "fdas/random.hpp"
#include "fdas/types.hpp"

namespace fdas {

/// Power ratio from decibels: 10^(db/10).
inline double db_to_linear(double db) {
  if (!std::isfinite(db)) {
    throw std::invalid_argument("db_to_linear: value must be finite");
  }
  return std::pow(10.0, db / 10.0);
}

/// Unit-mean exponential variate by inversion, g = -ln(u) for u in (0, 1).
/// This is the squared envelope of a Rayleigh-faded path with unit average
/// power.  For u = 0.5 this gives ln 2 = 0.693147...
template <class Scalar>
Scalar exp_from_uniform(Scalar u) {
  if (!(u > Scalar(0)) || !(u < Scalar(1))) {
    throw std::invalid_argument("exp_from_uniform: u must lie in (0, 1)");
  }
  return -std::log(u);
}

/// Fills an already-sized realization from the stream.  The draw order is
/// part of the determinism contract: downlink gains first (by transmit
/// antenna), then uplink gains (by receive antenna), then the loopback
/// matrix row by row.
template <class Scalar>
void sample_channel(TrialStream& stream, ChannelRealization<Scalar>& out) {
  for (Index j = 0; j < out.dl_gains.size(); ++j) {
    out.dl_gains[j] = -std::log(Scalar(stream.next_uniform()));
  }
  for (Index i = 0; i < out.ul_gains.size(); ++i) {
    out.ul_gains[i] = -std::log(Scalar(stream.next_uniform()));
  }
  for (Index i = 0; i < out.self_gains.rows(); ++i) {
    for (Index j = 0; j < out.self_gains.cols(); ++j) {
      out.self_gains(i, j) = -std::log(Scalar(stream.next_uniform()));
    }
  }
}

/// All-new realization with m_t transmit and m_r receive antennas.
template <class Scalar = double>
ChannelRealization<Scalar> sample_channel(TrialStream& stream, Index m_t,
                                          Index m_r) {
  if (m_t < 1 || m_r < 1) {
    throw std::invalid_argument("sample_channel: antenna counts must be >= 1");
  }
  ChannelRealization<Scalar> real;
  real.dl_gains.resize(m_t);
  real.ul_gains.resize(m_r);
  real.self_gains.resize(m_r, m_t);
  sample_channel(stream, real);
  return real;
}

}  // namespace fdas
