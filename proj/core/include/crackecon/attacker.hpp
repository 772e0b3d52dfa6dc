#pragma once

#include <cstdint>
#include <functional>

#include "crackecon/distribution.hpp"

namespace crackecon {

/// Economic parameters of a rational offline attacker, in units of the cost
/// of one hash evaluation: v is the value of a cracked password, k the cost
/// per guess, and a in (0,1] models diminishing returns (a = 1 means none).
struct AttackerParams {
  double v = 0.0;
  double k = 1.0;
  double a = 1.0;
};

/// Expected totals and marginals after guessing the top t passwords:
///   C(t) = t*(1 - lambda_t)*k + k * sum_{j<=t} j*p_j
///   R(t) = v * lambda_t^a
///   MC(t) = k*(1 - lambda_{t-1})      (= C(t) - C(t-1))
///   MR(t) = v*(lambda_t^a - lambda_{t-1}^a)   (= R(t) - R(t-1))
struct GuessingCurves {
  double revenue = 0.0;
  double cost = 0.0;
  double marginal_revenue = 0.0;
  double marginal_cost = 0.0;
};

GuessingCurves guessing_curves(const PasswordDistribution& dist, std::uint64_t t,
                               const AttackerParams& params);

enum class AttackMode {
  kMarginalScan,  ///< guess while MR(t) >= MC(t); ties continue
  kBruteForce,    ///< argmax of R(t) - C(t) over every t; ties break low
};

struct AttackOutcome {
  std::uint64_t t_star = 0;
  double fraction_cracked = 0.0;
  double utility = 0.0;
  AttackMode mode = AttackMode::kBruteForce;
};

/// Optimal stopping threshold for a rational attacker. The two modes agree
/// whenever a = 1 and p_t is non-increasing; for a < 1 the marginal rule can
/// in principle stop early, so kBruteForce is the authoritative answer.
AttackOutcome optimal_threshold(const PasswordDistribution& dist,
                                const AttackerParams& params, AttackMode mode);

/// Lower bound on the fraction cracked by *some* attacker under competition:
///   min over p in [0,1] of max{ crack_curve(p * v), 1 - p }
/// evaluated on a uniform grid of `grid` points, refined once around the
/// grid minimum. crack_curve must be monotone non-decreasing in its value
/// argument (and already embody the diminishing-returns exponent).
double competition_lower_bound(const std::function<double(double)>& crack_curve,
                               double v, int grid);

/// Memoizing value -> fraction-cracked curve over optimal_threshold, for use
/// with competition_lower_bound.
std::function<double(double)> make_cracked_curve(const PasswordDistribution& dist,
                                                 double k, double a);

}  // namespace crackecon
