#include "crackecon/dp_perturb.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "crackecon/errors.hpp"
#include "crackecon/rng.hpp"
#include "crackecon/zipf_fit.hpp"

namespace crackecon {
namespace {

ParamStats stats_of(const std::vector<double>& xs) {
  ParamStats out;
  double sum = 0.0;
  for (double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.stddev = xs.size() > 1
                   ? std::sqrt(ss / static_cast<double>(xs.size() - 1))
                   : 0.0;
  return out;
}

}  // namespace

FrequencyCorpus perturb(const FrequencyCorpus& corpus, double epsilon_dp,
                        std::uint64_t seed) {
  if (!(epsilon_dp > 0.0)) throw DomainError("noise scale epsilon must be > 0");
  // Two-sided geometric noise: the difference of two geometric variables
  // with ratio alpha = exp(-epsilon) has P(X = x) proportional to
  // alpha^|x|, mean 0 and mean absolute deviation 2*alpha/(1 - alpha^2).
  const double alpha = std::exp(-epsilon_dp);
  const double p_success = 1.0 - alpha;

  Rng rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(corpus.n_distinct());
  for (std::uint64_t f : corpus.counts()) {
    const std::int64_t g1 = static_cast<std::int64_t>(rng.geometric_failures(p_success));
    const std::int64_t g2 = static_cast<std::int64_t>(rng.geometric_failures(p_success));
    const std::int64_t noisy = static_cast<std::int64_t>(f) + g1 - g2;
    if (noisy >= 1) out.push_back(static_cast<std::uint64_t>(noisy));
  }
  return FrequencyCorpus::from_counts(std::move(out));
}

FitImpactStudy fit_impact_study(const FrequencyCorpus& corpus,
                                const PerturbParams& params, FitFamily family,
                                std::uint64_t pdf_cutoff) {
  if (params.n_trials < 2) throw DomainError("impact study requires n_trials >= 2");

  struct TrialResult {
    std::map<std::string, double> values;
    std::string error;
  };
  std::vector<TrialResult> trials(params.n_trials);

  auto run_trial = [&](unsigned i) {
    TrialResult& tr = trials[i];
    try {
      const FrequencyCorpus noisy = perturb(corpus, params.epsilon_dp, params.seed + i);
      if (family == FitFamily::kCdfLls) {
        const CdfZipfFit fit = fit_cdf_zipf_lls(noisy);
        tr.values = {{"y", fit.y}, {"r", fit.r}, {"r_squared", fit.r_squared}};
      } else {
        const PdfZipfFit fit = fit_pdf_zipf_lls(noisy, pdf_cutoff);
        tr.values = {{"s", fit.s},
                     {"log_c", fit.log_c},
                     {"z", fit.z},
                     {"r_squared", fit.r_squared}};
      }
    } catch (const std::exception& e) {
      tr.error = e.what();
    }
  };

  const unsigned n_workers =
      std::min(params.n_trials, std::max(1u, std::thread::hardware_concurrency()));
  if (n_workers <= 1) {
    for (unsigned i = 0; i < params.n_trials; ++i) run_trial(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<unsigned> next{0};
    for (unsigned w = 0; w < n_workers; ++w) {
      pool.emplace_back([&] {
        for (unsigned i = next.fetch_add(1); i < params.n_trials;
             i = next.fetch_add(1)) {
          run_trial(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  for (unsigned i = 0; i < params.n_trials; ++i) {
    if (!trials[i].error.empty()) {
      throw InsufficientDataError("trial " + std::to_string(i) +
                                  " failed: " + trials[i].error);
    }
  }

  FitImpactStudy study;
  study.n_trials = params.n_trials;
  study.epsilon_dp = params.epsilon_dp;
  study.mechanism = std::string(kPerturbMechanism);
  for (const auto& [name, unused] : trials[0].values) {
    (void)unused;
    std::vector<double> xs;
    xs.reserve(params.n_trials);
    for (const TrialResult& tr : trials) xs.push_back(tr.values.at(name));
    study.stats[name] = stats_of(xs);
  }
  return study;
}

}  // namespace crackecon
