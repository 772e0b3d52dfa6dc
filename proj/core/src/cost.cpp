#include "crackecon/cost.hpp"

#include <cmath>
#include <thread>

#include "crackecon/attacker.hpp"
#include "crackecon/errors.hpp"

namespace crackecon {

HashCost hash_cost(const CostModel& model) {
  if (!(model.tau >= 0.0)) throw DomainError("tau must be >= 0");
  if (!(model.c_hash > 0.0)) throw DomainError("c_hash must be > 0");
  if (!(model.c_mem >= 0.0)) throw DomainError("c_mem must be >= 0");

  HashCost out;
  if (model.kind == CostModel::Kind::kIterated) {
    out.k_units = model.tau;
    out.k_dollars = model.tau * model.c_hash;
  } else {
    out.k_dollars = model.tau * model.c_hash + model.tau * model.tau * model.c_mem;
    out.k_units = out.k_dollars / model.c_hash;
  }
  return out;
}

double extrapolate_value(const ValueSpec& spec) {
  if (!(spec.q_observed > 0.0) || spec.q_observed > 1.0) {
    throw DomainError("observed market fraction q must lie in (0, 1]");
  }
  if (!(spec.a > 0.0) || spec.a > 1.0) {
    throw DomainError("diminishing-returns exponent a must lie in (0, 1]");
  }
  if (!(spec.price_observed >= 0.0)) throw DomainError("price must be >= 0");
  return spec.price_observed * std::pow(spec.q_observed, 1.0 - spec.a);
}

std::vector<CrackCurvePoint> crack_curve_vs_tau(const PasswordDistribution& dist,
                                                double v_dollars, CostModel::Kind kind,
                                                std::span<const double> tau_grid,
                                                double a, double c_hash, double c_mem) {
  std::vector<CrackCurvePoint> out(tau_grid.size());

  auto eval = [&](std::size_t i) {
    CostModel model{kind, tau_grid[i], c_hash, c_mem};
    const HashCost hc = hash_cost(model);
    CrackCurvePoint& pt = out[i];
    pt.tau = tau_grid[i];
    pt.log2_tau = tau_grid[i] > 0.0 ? std::log2(tau_grid[i]) : 0.0;
    pt.k_units = hc.k_units;
    pt.k_dollars = hc.k_dollars;
    if (hc.k_units <= 0.0) {
      // A free guess cracks the whole guessable support.
      pt.pct_cracked = 100.0 * dist.lambda(dist.support_size());
      return;
    }
    const AttackerParams params{v_dollars / c_hash, hc.k_units, a};
    const AttackOutcome outcome =
        optimal_threshold(dist, params, AttackMode::kBruteForce);
    pt.pct_cracked = 100.0 * outcome.fraction_cracked;
  };

  const std::size_t n_workers =
      std::min<std::size_t>(tau_grid.size(),
                            std::max(1u, std::thread::hardware_concurrency()));
  if (n_workers <= 1 || tau_grid.size() <= 1) {
    for (std::size_t i = 0; i < tau_grid.size(); ++i) eval(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < n_workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < tau_grid.size();
           i = next.fetch_add(1)) {
        eval(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace crackecon
