#pragma once

#include <cstdint>
#include <random>

namespace crackecon {

/// Seeded random source with hand-rolled variate generators.
///
/// std::mt19937_64 output is pinned by the standard, but the distribution
/// adaptors in <random> are not; every sampler here is written out so that a
/// fixed seed yields the same stream on any platform. That property backs the
/// bit-reproducibility contract of every seeded operation in the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; safe as a log() argument.
  double uniform01_open() { return 1.0 - uniform01(); }

  std::uint64_t next() { return gen_(); }

  /// Uniform integer in [0, n) by rejection (unbiased).
  std::uint64_t below(std::uint64_t n);

  /// Number of failures before the first success in Bernoulli(p) trials.
  std::uint64_t geometric_failures(double p);

  /// Binomial(n, p) variate. Uses geometric skips, so the cost is
  /// O(successes) for small p and O(failures) for p near 1.
  std::uint64_t binomial(std::uint64_t n, double p);

  /// Number of marked items in a size-`draws` subset drawn uniformly without
  /// replacement from `total` items of which `marked` are marked.
  /// Inverse-transform from the distribution mode, so the walk stays short
  /// and log-space pmf evaluation avoids underflow for large populations.
  std::uint64_t hypergeometric(std::uint64_t total, std::uint64_t marked,
                               std::uint64_t draws);

 private:
  std::mt19937_64 gen_;
};

}  // namespace crackecon
