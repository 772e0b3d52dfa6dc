#include "crackecon/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crackecon/numeric.hpp"

namespace crackecon {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

std::uint64_t Rng::geometric_failures(double p) {
  if (p >= 1.0) return 0;
  if (p <= 0.0) return std::numeric_limits<std::uint64_t>::max();
  const double denom = std::log1p(-p);
  if (!std::isfinite(denom) || denom == 0.0) return 0;
  const double g = std::floor(std::log(uniform01_open()) / denom);
  if (g >= 9.2e18) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(g);
}

std::uint64_t Rng::binomial(std::uint64_t n, double p) {
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - binomial(n, 1.0 - p);

  // Count successes by skipping geometric runs of failures.
  std::uint64_t successes = 0;
  std::uint64_t pos = 0;
  const double denom = std::log1p(-p);
  while (true) {
    const double g = std::floor(std::log(uniform01_open()) / denom);
    if (g >= static_cast<double>(n - pos)) break;
    pos += static_cast<std::uint64_t>(g) + 1;
    ++successes;
    if (pos >= n) break;
  }
  return successes;
}

std::uint64_t Rng::hypergeometric(std::uint64_t total, std::uint64_t marked,
                                  std::uint64_t draws) {
  if (draws == 0 || marked == 0) return 0;
  if (draws >= total) return marked;
  if (marked >= total) return draws;

  const double nt = static_cast<double>(total);
  const double nm = static_cast<double>(marked);
  const double nd = static_cast<double>(draws);

  const std::uint64_t lo =
      total - marked >= draws ? 0 : draws - (total - marked);
  const std::uint64_t hi = std::min(marked, draws);

  auto log_pmf = [&](std::uint64_t x) {
    const double dx = static_cast<double>(x);
    return log_choose(nm, dx) + log_choose(nt - nm, nd - dx) - log_choose(nt, nd);
  };
  // Ratio pmf(x+1)/pmf(x).
  auto ratio_up = [&](std::uint64_t x) {
    const double dx = static_cast<double>(x);
    return ((nm - dx) * (nd - dx)) / ((dx + 1.0) * (nt - nm - nd + dx + 1.0));
  };

  std::uint64_t mode = static_cast<std::uint64_t>(((nd + 1.0) * (nm + 1.0)) / (nt + 2.0));
  mode = std::clamp(mode, lo, hi);

  // Walk outward from the mode, consuming probability mass until the target
  // quantile is covered. The pmf decays on both sides, so the walk length is
  // on the order of the standard deviation.
  const double u = uniform01();
  const double pmf_mode = std::exp(log_pmf(mode));

  double acc = pmf_mode;
  if (acc >= u) return mode;

  double up_pmf = pmf_mode;
  double down_pmf = pmf_mode;
  std::uint64_t up = mode;
  std::uint64_t down = mode;
  while (up < hi || down > lo) {
    if (up < hi) {
      up_pmf *= ratio_up(up);
      ++up;
      acc += up_pmf;
      if (acc >= u) return up;
    }
    if (down > lo) {
      down_pmf /= ratio_up(down - 1);
      --down;
      acc += down_pmf;
      if (acc >= u) return down;
    }
  }
  // Rounding left a sliver of unassigned mass; attribute it to the boundary.
  return u < 0.5 ? lo : hi;
}

}  // namespace crackecon
