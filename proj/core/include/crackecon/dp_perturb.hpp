#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "crackecon/corpus.hpp"

namespace crackecon {

/// Identifier of the noise mechanism, embedded in every output so results
/// are never mistaken for a formally differentially private release.
inline constexpr std::string_view kPerturbMechanism = "geometric-v1";

struct PerturbParams {
  double epsilon_dp = 0.25;  ///< noise scale is 1/epsilon
  unsigned n_trials = 1;
  std::uint64_t seed = 0;
};

/// Adds independent two-sided geometric noise of scale 1/epsilon to each
/// count, clamps at zero, drops empty classes and re-sorts. Deterministic
/// given seed.
FrequencyCorpus perturb(const FrequencyCorpus& corpus, double epsilon_dp,
                        std::uint64_t seed);

enum class FitFamily { kCdfLls, kPdfLls };

struct ParamStats {
  double mean = 0.0;
  double stddev = 0.0;
};

struct FitImpactStudy {
  std::map<std::string, ParamStats> stats;  ///< per fitted parameter and R^2
  unsigned n_trials = 0;
  double epsilon_dp = 0.0;
  std::string mechanism;
};

/// Runs `n_trials` independent perturbations (sub-seed = seed + trial index,
/// trials in parallel) and fits each with the chosen family; reports the
/// mean and standard deviation of every fitted parameter. Fit errors abort
/// with the trial index. Requires n_trials >= 2.
FitImpactStudy fit_impact_study(const FrequencyCorpus& corpus,
                                const PerturbParams& params, FitFamily family,
                                std::uint64_t pdf_cutoff = 5);

}  // namespace crackecon
