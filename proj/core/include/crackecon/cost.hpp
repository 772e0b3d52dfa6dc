#pragma once

#include <span>
#include <vector>

#include "crackecon/distribution.hpp"

namespace crackecon {

/// Estimated dollar cost of one underlying hash evaluation (SHA-256 class).
inline constexpr double kDefaultHashCost = 7e-15;
/// Core-memory area ratio: dollars per block-timestep relative to c_hash.
inline constexpr double kDefaultMemRatio = 1.0 / 3000.0;
/// Sequential iterations computable in about one second on a CPU; the
/// usability ceiling annotated on every cost report.
inline constexpr double kOneSecondTau = 1e7;

/// Key-stretching cost model. Iterated hashes (PBKDF2, BCRYPT) cost
/// k = tau; an ideal memory-hard function has area-time cost
/// k = tau * C_H + tau^2 * C_mem.
struct CostModel {
  enum class Kind { kIterated, kMhf };
  Kind kind = Kind::kIterated;
  double tau = 1.0;
  double c_hash = kDefaultHashCost;
  double c_mem = kDefaultHashCost * kDefaultMemRatio;
};

struct HashCost {
  double k_units = 0.0;    ///< multiples of c_hash
  double k_dollars = 0.0;
};

HashCost hash_cost(const CostModel& model);

/// Market observation used to extrapolate the value of a cracked password:
/// price per password seen when a fraction q of the corpus is on the market.
struct ValueSpec {
  double price_observed = 0.0;
  double q_observed = 0.01;
  double a = 1.0;
};

/// v = price * q^(1-a): the per-password value once every password is on
/// the market, under diminishing returns a.
double extrapolate_value(const ValueSpec& spec);

struct CrackCurvePoint {
  double tau = 0.0;
  double log2_tau = 0.0;
  double k_units = 0.0;
  double k_dollars = 0.0;
  double pct_cracked = 0.0;
};

/// Fraction cracked by a rational attacker as the key-stretching parameter
/// sweeps tau_grid. Points are evaluated in parallel; output order follows
/// the grid.
std::vector<CrackCurvePoint> crack_curve_vs_tau(const PasswordDistribution& dist,
                                                double v_dollars, CostModel::Kind kind,
                                                std::span<const double> tau_grid,
                                                double a,
                                                double c_hash = kDefaultHashCost,
                                                double c_mem = kDefaultHashCost *
                                                               kDefaultMemRatio);

}  // namespace crackecon
