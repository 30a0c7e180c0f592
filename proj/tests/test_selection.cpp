#include <cmath>
#include <random>

#include <doctest.h>

#include "fdas/selection.hpp"

using fdas::ChannelRealization;
using fdas::GainDomain;
using fdas::Selection;
using fdas::Strategy;
using fdas::StrategyKind;

namespace {

/// The 2x2 instance used as a worked example throughout: downlink prefers
/// transmit antenna 1, uplink prefers receive antenna 0, and the loopback
/// matrix is smallest at (0, 0).
ChannelRealization<double> example_2x2() {
  ChannelRealization<double> real;
  real.dl_gains.resize(2);
  real.dl_gains << 0.2, 0.9;
  real.ul_gains.resize(2);
  real.ul_gains << 0.5, 0.1;
  real.self_gains.resize(2, 2);
  real.self_gains << 1.0, 2.0, 3.0, 4.0;
  return real;
}

ChannelRealization<double> random_instance(std::mt19937_64& rng,
                                           bool quantized) {
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_real_distribution<double> gain(0.01, 3.0);
  ChannelRealization<double> real;
  const int m_t = dim(rng), m_r = dim(rng);
  real.dl_gains.resize(m_t);
  real.ul_gains.resize(m_r);
  real.self_gains.resize(m_r, m_t);
  const auto draw = [&] {
    const double g = gain(rng);
    // Coarse quantization manufactures frequent exact ties.
    return quantized ? std::round(g * 2.0) / 2.0 + 0.5 : g;
  };
  for (int j = 0; j < m_t; ++j) real.dl_gains[j] = draw();
  for (int i = 0; i < m_r; ++i) real.ul_gains[i] = draw();
  for (int i = 0; i < m_r; ++i)
    for (int j = 0; j < m_t; ++j) real.self_gains(i, j) = draw();
  return real;
}

/// Independent reference: evaluate the strategy's objective on every pair
/// and keep the lexicographically first minimizer.
template <class ScoreFn>
std::pair<fdas::Index, fdas::Index> brute_force_argmin(
    const ChannelRealization<double>& real, ScoreFn&& score) {
  std::pair<fdas::Index, fdas::Index> best{0, 0};
  double best_score = score(0, 0);
  for (fdas::Index i = 0; i < real.rx_count(); ++i) {
    for (fdas::Index j = 0; j < real.tx_count(); ++j) {
      const double s = score(i, j);
      if (s < best_score ||
          (s == best_score && std::make_pair(i, j) < best)) {
        best = {i, j};
        best_score = s;
      }
    }
  }
  return best;
}

double transform(double power_gain, GainDomain domain) {
  return domain == GainDomain::amplitude ? std::sqrt(power_gain) : power_gain;
}

double ws_score(const ChannelRealization<double>& real, fdas::Index i,
                fdas::Index j, double w, GainDomain domain) {
  const double c = (1.0 - w) / 2.0;
  return -c * (transform(real.dl_gains[j], domain) +
               transform(real.ul_gains[i], domain)) +
         w * transform(real.self_gains(i, j), domain);
}

double ewc_score(const ChannelRealization<double>& real, fdas::Index i,
                 fdas::Index j, double w, double p, GainDomain domain) {
  const double c_link = std::exp(p * (1.0 - w) / 2.0) - 1.0;
  const double c_loop = std::exp(p * w) - 1.0;
  return c_link * (std::exp(-p * transform(real.dl_gains[j], domain)) +
                   std::exp(-p * transform(real.ul_gains[i], domain))) +
         c_loop * std::exp(p * transform(real.self_gains(i, j), domain));
}

}  // namespace

TEST_SUITE_BEGIN("selection");

TEST_CASE("max-gain selection on the 2x2 example") {
  const auto sel = fdas::select_mm(example_2x2());
  CHECK(sel.rx_index == 0);
  CHECK(sel.tx_index == 1);
  CHECK(sel.dl_gain == 0.9);
  CHECK(sel.ul_gain == 0.5);
  CHECK(sel.self_gain == 2.0);
  CHECK(sel.objective == doctest::Approx(-0.7).epsilon(1e-15));
}

TEST_CASE("least-interference selection on the 2x2 example") {
  const auto sel = fdas::select_li(example_2x2());
  CHECK(sel.rx_index == 0);
  CHECK(sel.tx_index == 0);
  CHECK(sel.dl_gain == 0.2);
  CHECK(sel.ul_gain == 0.5);
  CHECK(sel.self_gain == 1.0);
  CHECK(sel.objective == 1.0);
}

TEST_CASE("weighted sum on the 2x2 example, power domain") {
  const auto real = example_2x2();
  // Scores at w = 0.5: -(0.25)(h_j + g_i) + 0.5 a_ij.
  CHECK(ws_score(real, 0, 0, 0.5, GainDomain::power) ==
        doctest::Approx(0.325).epsilon(1e-15));
  CHECK(ws_score(real, 0, 1, 0.5, GainDomain::power) ==
        doctest::Approx(0.65).epsilon(1e-15));
  CHECK(ws_score(real, 1, 0, 0.5, GainDomain::power) ==
        doctest::Approx(1.425).epsilon(1e-15));
  CHECK(ws_score(real, 1, 1, 0.5, GainDomain::power) ==
        doctest::Approx(1.75).epsilon(1e-15));
  const auto sel = fdas::select_mo_ws(real, 0.5, GainDomain::power);
  CHECK(sel.rx_index == 0);
  CHECK(sel.tx_index == 0);
  CHECK(sel.objective == doctest::Approx(0.325).epsilon(1e-15));
  CHECK(sel.dl_gain == 0.2);
  CHECK(sel.ul_gain == 0.5);
  CHECK(sel.self_gain == 1.0);
}

TEST_CASE("weighted sum on the 2x2 example, amplitude domain") {
  const auto real = example_2x2();
  const auto sel = fdas::select_mo_ws(real, 0.5);  // amplitude is the default
  CHECK(sel.rx_index == 0);
  CHECK(sel.tx_index == 0);
  CHECK(sel.objective ==
        doctest::Approx(0.21141990582837363).epsilon(1e-12));
  CHECK(ws_score(real, 0, 1, 0.5, GainDomain::amplitude) ==
        doctest::Approx(0.29315926137728219).epsilon(1e-12));
  CHECK(ws_score(real, 1, 0, 0.5, GainDomain::amplitude) ==
        doctest::Approx(0.67516506340523968).epsilon(1e-12));
  CHECK(ws_score(real, 1, 1, 0.5, GainDomain::amplitude) ==
        doctest::Approx(0.68377223398316207).epsilon(1e-12));
}

TEST_CASE("exponentially weighted criterion matches a direct evaluation") {
  const auto real = example_2x2();
  for (const GainDomain domain : {GainDomain::amplitude, GainDomain::power}) {
    for (const double p : {0.25, 1.0, 3.0}) {
      const auto sel = fdas::select_mo_ewc(real, 0.5, p, domain);
      const auto ref = brute_force_argmin(real, [&](auto i, auto j) {
        return ewc_score(real, i, j, 0.5, p, domain);
      });
      CHECK(sel.rx_index == ref.first);
      CHECK(sel.tx_index == ref.second);
      CHECK(sel.objective ==
            doctest::Approx(ewc_score(real, ref.first, ref.second, 0.5, p,
                                      domain))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("ties resolve to the lowest receive index, then transmit index") {
  ChannelRealization<double> real;
  real.dl_gains = fdas::Vector<double>::Constant(3, 1.0);
  real.ul_gains = fdas::Vector<double>::Constant(3, 1.0);
  real.self_gains = fdas::Matrix<double>::Constant(3, 3, 2.0);
  for (const Strategy s :
       {Strategy{StrategyKind::mm_as, 0, 1, GainDomain::amplitude},
        Strategy{StrategyKind::li_as, 0, 1, GainDomain::amplitude},
        Strategy{StrategyKind::mo_ws, 0.3, 1, GainDomain::amplitude},
        Strategy{StrategyKind::mo_ewc, 0.3, 1, GainDomain::power}}) {
    const auto sel = fdas::apply_strategy(s, real);
    CHECK(sel.rx_index == 0);
    CHECK(sel.tx_index == 0);
  }

  // Duplicate loopback minima off the first row.
  real.self_gains << 5, 3, 7,  //
      9, 3, 8,                 //
      3, 6, 4;
  const auto li = fdas::select_li(real);
  CHECK(li.rx_index == 0);
  CHECK(li.tx_index == 1);

  // Duplicate downlink maxima: the lower transmit index wins.
  real.dl_gains << 2.0, 0.5, 2.0;
  CHECK(fdas::select_mm(real).tx_index == 0);
}

TEST_CASE("w = 0 and w = 1 reduce to the single-objective rules") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const auto real = random_instance(rng, k % 4 == 0);
    const auto mm = fdas::select_mm(real);
    const auto li = fdas::select_li(real);
    for (const GainDomain domain :
         {GainDomain::amplitude, GainDomain::power}) {
      const auto ws0 = fdas::select_mo_ws(real, 0.0, domain);
      CHECK(ws0.rx_index == mm.rx_index);
      CHECK(ws0.tx_index == mm.tx_index);
      const auto ws1 = fdas::select_mo_ws(real, 1.0, domain);
      CHECK(ws1.rx_index == li.rx_index);
      CHECK(ws1.tx_index == li.tx_index);
      for (const double p : {0.5, 1.0, 2.0}) {
        const auto e0 = fdas::select_mo_ewc(real, 0.0, p, domain);
        CHECK(e0.rx_index == mm.rx_index);
        CHECK(e0.tx_index == mm.tx_index);
        const auto e1 = fdas::select_mo_ewc(real, 1.0, p, domain);
        CHECK(e1.rx_index == li.rx_index);
        CHECK(e1.tx_index == li.tx_index);
      }
    }
  }
}

TEST_CASE("selections are optimal against exhaustive enumeration") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::uniform_real_distribution<double> sharpness(0.1, 4.0);
  for (int k = 0; k < 2000; ++k) {
    const auto real = random_instance(rng, k % 3 == 0);
    const double w = weight(rng);
    const double p = sharpness(rng);
    const GainDomain domain =
        (k % 2 == 0) ? GainDomain::amplitude : GainDomain::power;

    const auto ws = fdas::select_mo_ws(real, w, domain);
    const auto ws_ref = brute_force_argmin(real, [&](auto i, auto j) {
      return ws_score(real, i, j, w, domain);
    });
    CHECK(ws.rx_index == ws_ref.first);
    CHECK(ws.tx_index == ws_ref.second);

    const auto ewc = fdas::select_mo_ewc(real, w, p, domain);
    const auto ewc_ref = brute_force_argmin(real, [&](auto i, auto j) {
      return ewc_score(real, i, j, w, p, domain);
    });
    CHECK(ewc.rx_index == ewc_ref.first);
    CHECK(ewc.tx_index == ewc_ref.second);

    const auto mm = fdas::select_mm(real);
    const auto mm_ref = brute_force_argmin(real, [&](auto i, auto j) {
      return -(real.dl_gains[j] + real.ul_gains[i]) / 2.0;
    });
    CHECK(mm.rx_index == mm_ref.first);
    CHECK(mm.tx_index == mm_ref.second);

    const auto li = fdas::select_li(real);
    const auto li_ref = brute_force_argmin(
        real, [&](auto i, auto j) { return real.self_gains(i, j); });
    CHECK(li.rx_index == li_ref.first);
    CHECK(li.tx_index == li_ref.second);
  }
}

TEST_CASE("selected gains are exactly the realization entries") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto real = random_instance(rng, false);
    for (const Strategy s :
         {Strategy{StrategyKind::mm_as, 0, 1, GainDomain::amplitude},
          Strategy{StrategyKind::li_as, 0, 1, GainDomain::amplitude},
          Strategy{StrategyKind::mo_ws, 0.4, 1, GainDomain::amplitude},
          Strategy{StrategyKind::mo_ewc, 0.6, 0.5, GainDomain::power}}) {
      const auto sel = fdas::apply_strategy(s, real);
      CHECK(sel.dl_gain == real.dl_gains[sel.tx_index]);
      CHECK(sel.ul_gain == real.ul_gains[sel.rx_index]);
      CHECK(sel.self_gain == real.self_gains(sel.rx_index, sel.tx_index));
    }
  }
}

TEST_CASE("invalid parameters are rejected") {
  const auto real = example_2x2();
  CHECK_THROWS_AS(fdas::select_mo_ws(real, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(fdas::select_mo_ws(real, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(fdas::select_mo_ws(real, std::nan("")),
                  std::invalid_argument);
  CHECK_THROWS_AS(fdas::select_mo_ewc(real, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fdas::select_mo_ewc(real, 0.5, -1.0), std::invalid_argument);
  ChannelRealization<double> empty;
  CHECK_THROWS_AS(fdas::select_mm(empty), std::invalid_argument);
  ChannelRealization<double> mismatched = real;
  mismatched.self_gains.resize(1, 2);
  CHECK_THROWS_AS(fdas::select_li(mismatched), std::invalid_argument);
}

TEST_CASE("empirical weight formula") {
  CHECK(fdas::empirical_weight(0.1, 15.0) ==
        doctest::Approx(0.25001726748848925).epsilon(1e-12));
  CHECK(fdas::empirical_weight(1.0, 15.0) ==
        doctest::Approx(0.5).epsilon(1e-15));
  // Raw value -0.237... clamps to zero.
  CHECK(fdas::empirical_weight(0.001, 0.0) == 0.0);
  // Very strong interference at high SNR clamps to one.
  CHECK(fdas::empirical_weight(1.0, 45.0) == 1.0);
}

TEST_CASE("empirical weight clamps and is monotone in both arguments") {
  double prev = -1.0;
  for (double eta_db = -40.0; eta_db <= 0.0; eta_db += 2.5) {
    const double w = fdas::empirical_weight(std::pow(10.0, eta_db / 10.0), 12.0);
    CHECK(w >= 0.0);
    CHECK(w <= 1.0);
    CHECK(w >= prev);
    prev = w;
  }
  prev = -1.0;
  for (double snr = -10.0; snr <= 40.0; snr += 2.0) {
    const double w = fdas::empirical_weight(0.1, snr);
    CHECK(w >= 0.0);
    CHECK(w <= 1.0);
    CHECK(w >= prev);
    prev = w;
  }
  CHECK_THROWS_AS(fdas::empirical_weight(0.0, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(fdas::empirical_weight(-0.5, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(fdas::empirical_weight(0.1, std::nan("")),
                  std::invalid_argument);
}

TEST_CASE("apply_strategy dispatches to the matching rule") {
  const auto real = example_2x2();
  const auto mm = fdas::apply_strategy(
      Strategy{StrategyKind::mm_as, 0, 1, GainDomain::amplitude}, real);
  CHECK(mm.tx_index == fdas::select_mm(real).tx_index);
  const auto ws = fdas::apply_strategy(
      Strategy{StrategyKind::mo_ws, 0.5, 1, GainDomain::power}, real);
  CHECK(ws.objective ==
        fdas::select_mo_ws(real, 0.5, GainDomain::power).objective);
  const auto ewc = fdas::apply_strategy(
      Strategy{StrategyKind::mo_ewc, 0.5, 2.0, GainDomain::amplitude}, real);
  CHECK(ewc.objective ==
        fdas::select_mo_ewc(real, 0.5, 2.0, GainDomain::amplitude).objective);
}

TEST_SUITE_END();
