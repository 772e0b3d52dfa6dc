#include "crackecon/attacker.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "crackecon/errors.hpp"
#include "crackecon/numeric.hpp"

namespace crackecon {
namespace {

constexpr std::uint64_t kWalkableSupportCap = std::uint64_t{1} << 33;

void validate(const AttackerParams& params) {
  if (!(params.v >= 0.0)) throw DomainError("attacker value v must be >= 0");
  if (!(params.k > 0.0)) throw DomainError("attacker guess cost k must be > 0");
  if (!(params.a > 0.0) || params.a > 1.0) {
    throw DomainError("diminishing-returns exponent a must lie in (0, 1]");
  }
}

double pow_a(double lambda, double a) {
  if (lambda <= 0.0) return 0.0;
  return a == 1.0 ? lambda : std::pow(lambda, a);
}

}  // namespace

GuessingCurves guessing_curves(const PasswordDistribution& dist, std::uint64_t t,
                               const AttackerParams& params) {
  validate(params);
  if (t > dist.support_size()) {
    throw RangeError("threshold " + std::to_string(t) + " exceeds support " +
                     std::to_string(dist.support_size()));
  }
  GuessingCurves out;
  if (t == 0) return out;

  KahanSum lambda_acc;
  KahanSum weighted;  // sum of j * p_j
  double lambda_prev = 0.0;
  for (std::uint64_t j = 1; j <= t; ++j) {
    lambda_prev = lambda_acc.value();
    const double pj = dist.p(j);
    lambda_acc.add(pj);
    weighted.add(static_cast<double>(j) * pj);
  }
  const double lambda_t = lambda_acc.value();
  out.revenue = params.v * pow_a(lambda_t, params.a);
  out.cost = static_cast<double>(t) * (1.0 - lambda_t) * params.k +
             params.k * weighted.value();
  out.marginal_cost = params.k * (1.0 - lambda_prev);
  out.marginal_revenue =
      params.v * (pow_a(lambda_t, params.a) - pow_a(lambda_prev, params.a));
  return out;
}

AttackOutcome optimal_threshold(const PasswordDistribution& dist,
                                const AttackerParams& params, AttackMode mode) {
  validate(params);
  const std::uint64_t support = dist.support_size();
  if (support > kWalkableSupportCap) {
    throw UnsupportedError("support too large to scan (" + std::to_string(support) +
                           " ranks)");
  }

  AttackOutcome best;
  best.mode = mode;

  KahanSum lambda_acc;
  KahanSum utility_acc;  // sum of MR(t) - MC(t), equals R(t) - C(t)
  double lambda_prev = 0.0;
  double pow_prev = 0.0;
  for (std::uint64_t t = 1; t <= support; ++t) {
    lambda_acc.add(dist.p(t));
    const double lambda_t = std::min(1.0, lambda_acc.value());
    const double pow_t = pow_a(lambda_t, params.a);
    const double mr = params.v * (pow_t - pow_prev);
    const double mc = params.k * (1.0 - lambda_prev);

    if (mode == AttackMode::kMarginalScan) {
      if (mr < mc) break;
      utility_acc.add(mr - mc);
      best.t_star = t;
      best.fraction_cracked = lambda_t;
      best.utility = utility_acc.value();
    } else {
      utility_acc.add(mr - mc);
      if (utility_acc.value() > best.utility) {
        best.t_star = t;
        best.fraction_cracked = lambda_t;
        best.utility = utility_acc.value();
      }
    }
    lambda_prev = lambda_t;
    pow_prev = pow_t;
  }
  best.utility = std::max(0.0, best.utility);
  return best;
}

double competition_lower_bound(const std::function<double(double)>& crack_curve,
                               double v, int grid) {
  if (grid < 2) throw DomainError("competition grid needs at least 2 points");

  auto objective = [&](double p) {
    return std::max(crack_curve(p * v), 1.0 - p);
  };

  auto scan = [&](double lo, double hi) {
    double best_p = lo;
    double best = objective(lo);
    for (int i = 1; i < grid; ++i) {
      const double p = lo + (hi - lo) * static_cast<double>(i) /
                                static_cast<double>(grid - 1);
      const double val = objective(p);
      if (val < best) {
        best = val;
        best_p = p;
      }
    }
    return std::pair{best_p, best};
  };

  auto [p0, f0] = scan(0.0, 1.0);
  const double step = 1.0 / static_cast<double>(grid - 1);
  auto [p1, f1] = scan(std::max(0.0, p0 - step), std::min(1.0, p0 + step));
  (void)p1;
  return std::min(f0, f1);
}

std::function<double(double)> make_cracked_curve(const PasswordDistribution& dist,
                                                 double k, double a) {
  auto memo = std::make_shared<std::map<double, double>>();
  return [dist, k, a, memo](double value) {
    if (auto it = memo->find(value); it != memo->end()) return it->second;
    const AttackOutcome outcome =
        optimal_threshold(dist, AttackerParams{value, k, a}, AttackMode::kBruteForce);
    (*memo)[value] = outcome.fraction_cracked;
    return outcome.fraction_cracked;
  };
}

}  // namespace crackecon
