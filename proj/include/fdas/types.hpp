#pragma once

#include <Eigen/Dense>

namespace fdas {

template <class Scalar>
using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/// One block-fading snapshot of all link gains seen by the base station:
/// squared-envelope (power) gains, unit mean, strictly positive.
///   dl_gains[j]      downlink channel to the served user from transmit antenna j
///   ul_gains[i]      uplink channel from the served user into receive antenna i
///   self_gains(i,j)  loopback self-interference path from transmit j into receive i
template <class Scalar = double>
struct ChannelRealization {
  Vector<Scalar> dl_gains;
  Vector<Scalar> ul_gains;
  Matrix<Scalar> self_gains;

  Index tx_count() const { return dl_gains.size(); }
  Index rx_count() const { return ul_gains.size(); }
};

}  // namespace fdas
