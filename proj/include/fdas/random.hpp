#pragma once

#include <cstdint>

namespace fdas {

/// Counter-based pseudo-random stream for one Monte-Carlo trial.
///
/// Every trial draws from its own stream, derived purely from
/// (master seed, trial index).  Trial t therefore yields the same channel
/// realization no matter which thread runs it, in which order, or which
/// other strategies are being evaluated — the basis for common random
/// numbers and for results that do not depend on the worker count.
///
/// The generator is the splitmix64 finalizer over a Weyl sequence; its
/// 64-bit state is initialized as mix(seed) ^ mix((t + 1) * golden), which
/// is injective in the seed for a fixed trial and injective in the trial
/// index for a fixed seed.
class TrialStream {
 public:
  TrialStream(std::uint64_t master_seed, std::uint64_t trial_index)
      : state_(mix(master_seed) ^ mix((trial_index + 1) * kGolden)) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix(state_);
  }

  /// Uniform double in the open interval (0, 1).  Uses 52 random bits as
  /// (k + 0.5) * 2^-52, every value of which is exactly representable, so
  /// the result is never 0.0 nor 1.0 and -log of it is finite and > 0.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace fdas
