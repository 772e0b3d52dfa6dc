#include <doctest.h>

#include <cmath>
#include <vector>

#include "crackecon/attacker.hpp"
#include "crackecon/errors.hpp"
#include "crackecon/rng.hpp"
#include "crackecon/zipf_threshold.hpp"

using namespace crackecon;

namespace {

PasswordDistribution uniform4() {
  return PasswordDistribution::empirical(FrequencyCorpus::from_counts({1, 1, 1, 1}));
}

PasswordDistribution random_empirical(Rng& rng, std::uint64_t max_ranks) {
  std::vector<std::uint64_t> counts(2 + rng.below(max_ranks - 1));
  for (auto& c : counts) c = 1 + rng.below(1000);
  return PasswordDistribution::empirical(FrequencyCorpus::from_counts(counts));
}

}  // namespace

TEST_CASE("guessing curves on the uniform-4 distribution") {
  const auto d = uniform4();
  const AttackerParams params{10.0, 1.0, 1.0};

  SUBCASE("empty guess list") {
    const GuessingCurves c = guessing_curves(d, 0, params);
    CHECK(c.revenue == 0.0);
    CHECK(c.cost == 0.0);
  }
  SUBCASE("first marginal cost is k") {
    const GuessingCurves c = guessing_curves(d, 1, params);
    CHECK(c.marginal_cost == doctest::Approx(1.0));
  }
  SUBCASE("hand-computed values at t = 2") {
    const GuessingCurves c = guessing_curves(d, 2, params);
    CHECK(c.marginal_cost == doctest::Approx(0.75));
    CHECK(c.marginal_revenue == doctest::Approx(2.5));
    CHECK(c.cost == doctest::Approx(1.75));
    CHECK(c.revenue == doctest::Approx(5.0));
  }
  SUBCASE("t beyond the support is a range error") {
    CHECK_THROWS_AS(guessing_curves(d, 5, params), RangeError);
  }
}

TEST_CASE("marginal values are exact difference quotients") {
  Rng rng(31);
  for (int it = 0; it < 20; ++it) {
    const auto d = random_empirical(rng, 30);
    const AttackerParams params{1.0 + rng.uniform01() * 20.0, 0.5 + rng.uniform01(),
                                it % 2 == 0 ? 1.0 : 0.8};
    for (std::uint64_t t = 1; t <= d.support_size(); ++t) {
      const GuessingCurves at = guessing_curves(d, t, params);
      const GuessingCurves before = guessing_curves(d, t - 1, params);
      const double dc = at.cost - before.cost;
      const double dr = at.revenue - before.revenue;
      CHECK(std::abs(at.marginal_cost - dc) <=
            1e-9 * std::max(1.0, std::abs(at.marginal_cost)));
      CHECK(std::abs(at.marginal_revenue - dr) <=
            1e-9 * std::max(1.0, std::abs(at.marginal_revenue)));
      CHECK(at.marginal_cost <= params.k + 1e-12);
      CHECK(at.marginal_cost >= 0.0);
      CHECK(at.marginal_revenue >= -1e-12);
      CHECK(at.marginal_cost <= before.marginal_cost + 1e-12);
    }
  }
}

TEST_CASE("optimal threshold on the uniform-4 distribution") {
  const auto d = uniform4();
  SUBCASE("high value cracks everything") {
    for (AttackMode mode : {AttackMode::kBruteForce, AttackMode::kMarginalScan}) {
      const AttackOutcome out = optimal_threshold(d, {10.0, 1.0, 1.0}, mode);
      CHECK(out.t_star == 4);
      CHECK(out.fraction_cracked == doctest::Approx(1.0));
      CHECK(out.utility == doctest::Approx(7.5));
    }
  }
  SUBCASE("low value stops immediately") {
    const AttackOutcome out =
        optimal_threshold(d, {1.0, 1.0, 1.0}, AttackMode::kMarginalScan);
    CHECK(out.t_star == 0);
    CHECK(out.utility == 0.0);
    CHECK(out.fraction_cracked == 0.0);
  }
}

TEST_CASE("marginal scan matches brute force at a = 1") {
  Rng rng(47);
  int checked = 0;
  for (int it = 0; it < 50; ++it) {
    const auto d = random_empirical(rng, 50);
    const double v = std::pow(10.0, rng.uniform01() * 3.0 - 0.5);
    const AttackerParams params{v, 1.0, 1.0};
    const AttackOutcome brute = optimal_threshold(d, params, AttackMode::kBruteForce);
    const AttackOutcome scan = optimal_threshold(d, params, AttackMode::kMarginalScan);
    CHECK(std::abs(brute.utility - scan.utility) <=
          1e-9 * std::max(1.0, std::abs(brute.utility)));
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("brute force dominates the marginal scan for a < 1") {
  Rng rng(53);
  for (int it = 0; it < 50; ++it) {
    const auto d = random_empirical(rng, 50);
    const AttackerParams params{std::pow(10.0, rng.uniform01() * 3.0), 1.0,
                                it % 2 == 0 ? 0.9 : 0.8};
    const AttackOutcome brute = optimal_threshold(d, params, AttackMode::kBruteForce);
    const AttackOutcome scan = optimal_threshold(d, params, AttackMode::kMarginalScan);
    CHECK(brute.utility >= scan.utility - 1e-9);
    CHECK(brute.utility >= -1e-12);
  }
}

TEST_CASE("cracked fraction is monotone in v and k") {
  const auto d = PasswordDistribution::cdf_zipf(0.3, 0.5);
  double prev = -1.0;
  for (int i = 0; i < 20; ++i) {
    const double v = std::pow(10.0, -1.0 + 0.2 * i);
    const AttackOutcome out = optimal_threshold(d, {v, 1.0, 1.0}, AttackMode::kBruteForce);
    CHECK(out.fraction_cracked >= prev);
    prev = out.fraction_cracked;
  }
  prev = 2.0;
  for (int i = 0; i < 20; ++i) {
    const double k = std::pow(10.0, -2.0 + 0.2 * i);
    const AttackOutcome out = optimal_threshold(d, {5.0, k, 1.0}, AttackMode::kBruteForce);
    CHECK(out.fraction_cracked <= prev);
    prev = out.fraction_cracked;
  }
}

TEST_CASE("value just above the threshold cracks the whole distribution") {
  const double y = 0.5, r = 0.5;
  const auto d = PasswordDistribution::cdf_zipf(y, r);
  const auto thr = cdf_zipf_threshold(y, r, 1.0);
  const AttackOutcome out = optimal_threshold(
      d, {1.001 * thr.threshold, 1.0, 1.0}, AttackMode::kMarginalScan);
  CHECK(out.fraction_cracked == doctest::Approx(1.0));
  CHECK(out.t_star == d.support_size());
}

TEST_CASE("competition lower bound") {
  SUBCASE("fully cracked curve") {
    CHECK(competition_lower_bound([](double) { return 1.0; }, 3.0, 101) ==
          doctest::Approx(1.0));
  }
  SUBCASE("never cracked curve") {
    CHECK(competition_lower_bound([](double) { return 0.0; }, 3.0, 101) ==
          doctest::Approx(0.0));
  }
  SUBCASE("step curve settles at the step height") {
    const double v = 10.0;
    auto step = [v](double value) { return value >= v / 2.0 ? 0.6 : 0.0; };
    CHECK(competition_lower_bound(step, v, 1001) == doctest::Approx(0.6));
  }
  SUBCASE("memoized curve over the attacker") {
    const auto d = uniform4();
    auto curve = make_cracked_curve(d, 1.0, 1.0);
    CHECK(curve(10.0) == doctest::Approx(1.0));
    CHECK(curve(1.0) == doctest::Approx(0.0));
    const double bound = competition_lower_bound(curve, 10.0, 51);
    CHECK(bound >= 0.0);
    CHECK(bound <= 1.0);
  }
}

TEST_CASE("parameter validation") {
  const auto d = uniform4();
  CHECK_THROWS_AS(optimal_threshold(d, {-1.0, 1.0, 1.0}, AttackMode::kBruteForce),
                  DomainError);
  CHECK_THROWS_AS(optimal_threshold(d, {1.0, 0.0, 1.0}, AttackMode::kBruteForce),
                  DomainError);
  CHECK_THROWS_AS(optimal_threshold(d, {1.0, 1.0, 1.5}, AttackMode::kBruteForce),
                  DomainError);
}
