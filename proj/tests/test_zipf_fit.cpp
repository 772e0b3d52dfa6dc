#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "crackecon/distribution.hpp"
#include "crackecon/errors.hpp"
#include "crackecon/numeric.hpp"
#include "crackecon/rng.hpp"
#include "crackecon/zipf_fit.hpp"

using namespace crackecon;

namespace {

// f_i = 2520 / i for i = 1..10 is integral at every rank, so the pdf
// regression input is exactly log-linear (s = 1, C = 2520).
FrequencyCorpus exact_pdf_corpus() {
  std::vector<std::uint64_t> counts;
  for (std::uint64_t i = 1; i <= 10; ++i) counts.push_back(2520 / i);
  return FrequencyCorpus::from_counts(std::move(counts));
}

}  // namespace

TEST_CASE("regression recovers exact log-linear points to 1e-9") {
  std::vector<double> xs, ys;
  for (int t = 1; t <= 50; ++t) {
    xs.push_back(std::log10(static_cast<double>(t)));
    ys.push_back(std::log10(0.05) + 0.25 * xs.back());
  }
  const LinearFit fit = linear_regression(xs, ys);
  CHECK(fit.slope == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(std::pow(10.0, fit.intercept) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pdf fit is exact on an exactly log-linear corpus") {
  const PdfZipfFit fit = fit_pdf_zipf_lls(exact_pdf_corpus(), 5);
  CHECK(fit.s == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fit.log_c == doctest::Approx(std::log10(2520.0)).epsilon(1e-9));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_FALSE(fit.exponent_in_range);  // s = 1 sits outside (0, 1)
  CHECK(std::abs(fit.z - std::pow(10.0, fit.log_c) /
                             static_cast<double>(exact_pdf_corpus().n_users())) <=
        1e-9 * fit.z);
}

TEST_CASE("pdf fit recovers a rounded synthetic generator") {
  std::vector<std::uint64_t> counts;
  for (std::uint64_t i = 1; i <= 1000; ++i) {
    counts.push_back(static_cast<std::uint64_t>(
        std::llround(1e6 / std::pow(static_cast<double>(i), 0.9))));
  }
  const FrequencyCorpus corpus = FrequencyCorpus::from_counts(std::move(counts));
  const PdfZipfFit fit = fit_pdf_zipf_lls(corpus, 5);
  CHECK(fit.n_points == 1000);  // every count stays >= 5
  CHECK(fit.s == doctest::Approx(0.9).epsilon(0.0112));
  CHECK(fit.r_squared >= 0.999);
}

TEST_CASE("pdf fit needs two points above the cutoff") {
  const FrequencyCorpus corpus = FrequencyCorpus::from_counts({4, 4, 3});
  CHECK_THROWS_AS(fit_pdf_zipf_lls(corpus, 5), InsufficientDataError);
  CHECK_THROWS_AS(fit_cdf_zipf_lls(FrequencyCorpus::from_counts({7})),
                  InsufficientDataError);
}

TEST_CASE("cdf fit is exact on a uniform corpus") {
  // lambda_t = t / M exactly: a CDF-Zipf law with y = 1/M, r = 1.
  const FrequencyCorpus corpus =
      FrequencyCorpus::from_counts(std::vector<std::uint64_t>(8, 3));
  const CdfZipfFit fit = fit_cdf_zipf_lls(corpus);
  CHECK(fit.y == doctest::Approx(1.0 / 8.0).epsilon(1e-9));
  CHECK(fit.r == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fit.ks <= 1e-9);
  CHECK_FALSE(fit.exponent_in_range);
}

TEST_CASE("cdf fit recovers parameters from a saturated sampled corpus") {
  const auto model = PasswordDistribution::cdf_zipf(0.05, 0.25);
  for (std::uint64_t seed : {11u, 12u}) {
    const FrequencyCorpus corpus = model.sample(1000000, seed);
    const CdfZipfFit fit = fit_cdf_zipf_lls(corpus);
    CHECK(std::abs(fit.r - 0.25) <= 0.02);
  }
}

TEST_CASE("ks distance cases") {
  const FrequencyCorpus two = FrequencyCorpus::from_counts({1, 1});
  SUBCASE("model matching the empirical cdf exactly") {
    CHECK(ks_distance(two, 0.5, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("hand-evaluated distance") {
    // model: [0.4, 0.4 * 2^0.5 = 0.5657]; empirical: [0.5, 1.0]
    CHECK(ks_distance(two, 0.4, 0.5) ==
          doctest::Approx(1.0 - 0.4 * std::sqrt(2.0)).epsilon(1e-9));
  }
  SUBCASE("distance is bounded by one") {
    Rng rng(5);
    for (int it = 0; it < 30; ++it) {
      std::vector<std::uint64_t> counts(2 + rng.below(50));
      for (auto& c : counts) c = 1 + rng.below(100);
      const FrequencyCorpus corpus = FrequencyCorpus::from_counts(counts);
      const double d = ks_distance(corpus, 0.01 + rng.uniform01() * 0.9,
                                   0.05 + rng.uniform01() * 0.9);
      CHECK(d >= 0.0);
      CHECK(d <= 1.0);
    }
  }
}

TEST_CASE("gss attains zero distance on an exactly representable corpus") {
  // [3, 1]: lambda = [0.75, 1] = 0.75 * t^(log2(4/3)), r ~ 0.415 in range.
  const FrequencyCorpus corpus = FrequencyCorpus::from_counts({3, 1});
  const CdfZipfFit fit = fit_cdf_zipf_gss(corpus);
  CHECK(fit.ks <= 1e-6);
  CHECK(fit.method == CdfFitMethod::kGssNested);
}

TEST_CASE("gss is deterministic and beats the lls fit on its own objective") {
  Rng rng(17);
  std::vector<std::uint64_t> counts(200);
  for (auto& c : counts) c = 1 + rng.below(500);
  const FrequencyCorpus corpus = FrequencyCorpus::from_counts(counts);

  const CdfZipfFit a = fit_cdf_zipf_gss(corpus);
  const CdfZipfFit b = fit_cdf_zipf_gss(corpus);
  CHECK(a.y == b.y);
  CHECK(a.r == b.r);
  CHECK(a.ks == b.ks);

  const CdfZipfFit lls = fit_cdf_zipf_lls(corpus);
  CHECK(a.ks <= lls.ks + 1e-12);
}

TEST_CASE("gss matches an exhaustive grid to 1e-4") {
  Rng rng(23);
  std::vector<std::uint64_t> counts(200);
  for (auto& c : counts) c = 1 + rng.below(400);
  const FrequencyCorpus corpus = FrequencyCorpus::from_counts(counts);

  const CdfZipfFit fit = fit_cdf_zipf_gss(corpus);

  double grid_best = 1.0;
  const int kGrid = 1000;
  for (int i = 0; i < kGrid; ++i) {
    const double r = 0.01 + (0.99 - 0.01) * i / (kGrid - 1);
    for (int j = 0; j < kGrid; ++j) {
      const double y =
          std::pow(10.0, -6.0 + 6.0 * static_cast<double>(j) / (kGrid - 1));
      grid_best = std::min(grid_best, ks_distance(corpus, y, r));
    }
  }
  CHECK(fit.ks <= grid_best + 1e-4);
}

TEST_CASE("lls fits stabilize under nested subsampling") {
  // Deterministic synthetic Zipf corpus of ~1e6 users.
  std::vector<std::uint64_t> counts;
  for (std::uint64_t i = 1;; ++i) {
    const auto f = static_cast<std::uint64_t>(
        std::llround(38000.0 / std::pow(static_cast<double>(i), 0.9)));
    if (f < 1) break;
    counts.push_back(f);
  }
  const FrequencyCorpus corpus = FrequencyCorpus::from_counts(std::move(counts));
  const double r_full = fit_cdf_zipf_lls(corpus).r;

  FrequencyCorpus current = corpus;
  std::vector<double> errors;
  for (std::uint64_t divisor : {2, 4, 8}) {
    current = current.subsample(corpus.n_users() / divisor, 1234 + divisor);
    errors.push_back(std::abs(fit_cdf_zipf_lls(current).r - r_full));
  }
  // |r_m - r_full| grows as the nested sample shrinks.
  CHECK(errors[0] < errors[1]);
  CHECK(errors[1] < errors[2]);
}
