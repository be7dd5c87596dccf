#pragma once

#include <cstdint>
#include <random>

namespace baxter {

/// Seeded 64-bit generator with a buffered source of fair bits.
///
/// Every random draw in the library goes through an explicit Rng; there is no
/// global state. Two generators built from the same seed produce identical
/// streams on the same build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent stream for task `stream` of a run seeded with `seed`.
  static Rng derived(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64() { return engine_(); }

  bool fair_bit();

  /// Number of failures before the first success of fair coin flips:
  /// P(k) = 2^{-k-1}. Drawn bit by bit, so the law is exact.
  unsigned geometric_half();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

  /// Uniform on (0, 1] with 53 random bits.
  double uniform_open_closed();

  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

  double normal();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t bits_ = 0;
  int bits_left_ = 0;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace baxter
