#include <doctest.h>

#include <cmath>

#include "crackecon/distribution.hpp"
#include "crackecon/errors.hpp"
#include "crackecon/numeric.hpp"

using namespace crackecon;

TEST_CASE("cdf-zipf truncation rank") {
  SUBCASE("saturates at the first rank when y = 1") {
    const auto d = PasswordDistribution::cdf_zipf(1.0, 0.5);
    CHECK(d.support_size() == 1);
    CHECK(d.lambda(1) == doctest::Approx(1.0));
  }
  SUBCASE("y = 0.25, r = 0.5") {
    const auto d = PasswordDistribution::cdf_zipf(0.25, 0.5);
    CHECK(d.support_size() == 16);
    CHECK(d.lambda(4) == doctest::Approx(0.5));
    CHECK(d.lambda(16) == doctest::Approx(1.0));
  }
  SUBCASE("y > 1 is rejected") {
    CHECK_THROWS_AS(PasswordDistribution::cdf_zipf(1.5, 0.5), DomainError);
  }
}

TEST_CASE("empirical distribution probabilities") {
  const auto corpus = FrequencyCorpus::from_counts({2, 1, 1});
  const auto d = PasswordDistribution::empirical(corpus);
  CHECK(d.support_size() == 3);
  CHECK(d.p(1) == doctest::Approx(0.5));
  CHECK(d.p(2) == doctest::Approx(0.25));
  CHECK(d.p(3) == doctest::Approx(0.25));
  CHECK(d.lambda(0) == 0.0);
  CHECK(d.lambda(3) == doctest::Approx(1.0));
}

TEST_CASE("lambda equals the prefix sum of p for every variant") {
  const auto check_consistency = [](const PasswordDistribution& d) {
    KahanSum acc;
    for (std::uint64_t t = 1; t <= d.support_size(); ++t) {
      acc.add(d.p(t));
      CHECK(std::abs(d.lambda(t) - acc.value()) <= 1e-9);
      CHECK(d.p(t) >= 0.0);
      CHECK(d.lambda(t) >= d.lambda(t - 1));
      CHECK(d.lambda(t) <= 1.0 + 1e-12);
    }
  };
  check_consistency(PasswordDistribution::empirical(
      FrequencyCorpus::from_counts({9, 4, 4, 2, 1, 1, 1})));
  check_consistency(PasswordDistribution::cdf_zipf(0.25, 0.5));
  check_consistency(PasswordDistribution::cdf_zipf(0.05, 0.4));
  check_consistency(PasswordDistribution::pdf_zipf(0.3, 0.6));
  check_consistency(PasswordDistribution::pdf_zipf(0.05, 0.5));
}

// z = 1e-4, s = 0.5 puts the support around 2.5e7, far past the exact head
// table, so this exercises the analytic continuation of lambda.
TEST_CASE("pdf-zipf cumulative matches direct summation past the head table") {
  const auto d = PasswordDistribution::pdf_zipf(1e-4, 0.5);
  REQUIRE(d.support_size() > (std::uint64_t{1} << 20));

  const std::uint64_t probe = (std::uint64_t{1} << 20) + 1500000;
  KahanSum direct;
  for (std::uint64_t t = 1; t <= probe; ++t) {
    direct.add(1e-4 * std::pow(static_cast<double>(t), -0.5));
  }
  CHECK(std::abs(d.lambda(probe) - direct.value()) <= 1e-9);
  CHECK(d.lambda(d.support_size()) <= 1.0);
  CHECK(d.lambda(d.support_size()) + d.tail_mass() == doctest::Approx(1.0));
}

TEST_CASE("pdf-zipf support keeps total mass at most one") {
  const auto d = PasswordDistribution::pdf_zipf(0.5, 0.5);
  // 0.5 + 0.3536 <= 1 but adding rank 3 (0.2887) would overflow.
  CHECK(d.support_size() == 2);
  CHECK(d.tail_mass() == doctest::Approx(1.0 - 0.5 - 0.5 / std::sqrt(2.0)));
}

TEST_CASE("sampling basics") {
  SUBCASE("n = 0 gives an empty corpus") {
    const auto d = PasswordDistribution::cdf_zipf(0.5, 0.5);
    const FrequencyCorpus c = d.sample(0, 1);
    CHECK(c.n_users() == 0);
  }
  SUBCASE("a point mass collapses to a single class") {
    const auto d = PasswordDistribution::empirical(FrequencyCorpus::from_counts({1}));
    const FrequencyCorpus c = d.sample(137, 5);
    CHECK(c.counts() == std::vector<std::uint64_t>{137});
  }
  SUBCASE("sampling is deterministic in the seed") {
    const auto d = PasswordDistribution::cdf_zipf(0.3, 0.4);
    CHECK(d.sample(5000, 12).counts() == d.sample(5000, 12).counts());
  }
}

TEST_CASE("sampled rank-1 frequency matches binomial moments") {
  const auto d = PasswordDistribution::cdf_zipf(0.5, 0.5);
  const std::uint64_t n = 100000;
  const int kSeeds = 100;
  // Rank 1 holds mass 0.5 and every other rank is far smaller, so the top
  // sorted count is the rank-1 count.
  double sum = 0.0;
  for (int seed = 0; seed < kSeeds; ++seed) {
    sum += static_cast<double>(d.sample(n, seed).counts()[0]);
  }
  const double mean = sum / kSeeds;
  const double sigma_mean = std::sqrt(static_cast<double>(n) * 0.25 / kSeeds);
  CHECK(std::abs(mean - 0.5 * static_cast<double>(n)) <= 3.0 * sigma_mean);
}

TEST_CASE("pdf-zipf tail draws become singletons") {
  const auto d = PasswordDistribution::pdf_zipf(0.5, 0.5);  // tail mass ~ 0.1464
  const FrequencyCorpus c = d.sample(2000, 31);
  CHECK(c.n_users() == 2000);
  std::uint64_t singles = 0;
  for (std::uint64_t f : c.counts()) {
    if (f == 1) ++singles;
  }
  // Expected ~293 singleton draws; 3 sigma ~ 47.
  CHECK(singles > 150);
  CHECK(singles < 440);
}
