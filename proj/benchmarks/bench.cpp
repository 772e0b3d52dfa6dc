#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "crackecon/attacker.hpp"
#include "crackecon/bounds.hpp"
#include "crackecon/corpus.hpp"
#include "crackecon/distribution.hpp"
#include "crackecon/zipf_fit.hpp"
#include "crackecon/zipf_threshold.hpp"

namespace {

using namespace crackecon;

FrequencyCorpus synthetic_corpus(std::uint64_t scale) {
  std::vector<std::uint64_t> counts;
  for (std::uint64_t i = 1;; ++i) {
    const auto f = static_cast<std::uint64_t>(
        std::llround(static_cast<double>(scale) / std::pow(double(i), 0.9)));
    if (f < 1) break;
    counts.push_back(f);
  }
  return FrequencyCorpus::from_counts(std::move(counts));
}

void BM_CdfLlsFit(benchmark::State& state) {
  const FrequencyCorpus corpus = synthetic_corpus(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_cdf_zipf_lls(corpus));
  }
  state.SetItemsProcessed(state.iterations() * corpus.n_distinct());
}
BENCHMARK(BM_CdfLlsFit)->Arg(1000)->Arg(38000)->Arg(400000);

void BM_KsDistance(benchmark::State& state) {
  const FrequencyCorpus corpus = synthetic_corpus(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ks_distance(corpus, 0.03, 0.22));
  }
  state.SetItemsProcessed(state.iterations() * corpus.n_distinct());
}
BENCHMARK(BM_KsDistance)->Arg(38000)->Arg(400000);

void BM_GssFit(benchmark::State& state) {
  const FrequencyCorpus corpus = synthetic_corpus(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_cdf_zipf_gss(corpus));
  }
}
BENCHMARK(BM_GssFit)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_CdfThreshold(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cdf_zipf_threshold(0.0211, 0.2166, 0.8));
  }
}
BENCHMARK(BM_CdfThreshold);

void BM_OptimalThreshold(benchmark::State& state) {
  const auto dist = PasswordDistribution::cdf_zipf(0.05, 0.25);
  const AttackerParams params{500.0, 1.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_threshold(dist, params, AttackMode::kBruteForce));
  }
  state.SetItemsProcessed(state.iterations() * dist.support_size());
}
BENCHMARK(BM_OptimalThreshold);

void BM_UpperBoundMu(benchmark::State& state) {
  const FrequencyCorpus corpus = synthetic_corpus(38000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(upper_bound_cracked(corpus, 3, 10.0, 0.5, 100));
  }
}
BENCHMARK(BM_UpperBoundMu);

void BM_Subsample(benchmark::State& state) {
  const FrequencyCorpus corpus = synthetic_corpus(38000);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(corpus.subsample(corpus.n_users() / 2, seed++));
  }
}
BENCHMARK(BM_Subsample);

}  // namespace

BENCHMARK_MAIN();
