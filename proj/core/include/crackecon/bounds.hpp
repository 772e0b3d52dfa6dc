#pragma once

#include <cstdint>

#include "crackecon/corpus.hpp"

namespace crackecon {

/// Model-independent bound on the expected number of cracked users.
///
/// The lower bound applies when V/k >= N*L (reported as v_over_k); its raw
/// formula value can be negative for aggressive j, so both the raw and the
/// clamped value are kept. The upper bound applies when
/// V/k <= N*L*(1 - (1+eps)/N * sum_{i<=t} f_i) and holds except with
/// probability failure_prob; mu is its binomial-tail correction term. The
/// failure probability substitutes the empirical head mass for the unknown
/// true head probability and is labeled as such in CLI output.
struct BoundsResult {
  double bound_count = 0.0;     ///< clamped at 0 for the lower bound
  double bound_fraction = 0.0;  ///< bound_count / N
  double raw_count = 0.0;       ///< pre-clamp value (lower bound only)
  double mu = 0.0;              ///< upper bound only
  double failure_prob = 0.0;    ///< upper bound only, in [0, 1]
  double v_over_k = 0.0;        ///< implied (LB) or precondition (UB) ratio
};

/// Expected cracked users is at least
///   sum_{i: f_i >= j} f_i  -  N / ((j-1)! * L^(j-1))
/// for a rational attacker with V/k >= N*L and a = 1. Requires j >= 1.
BoundsResult lower_bound_cracked(const FrequencyCorpus& corpus, unsigned j, double L);

/// Expected cracked users is at most
///   sum_{i: f_i > j} f_i + mu(N, L, j)
/// where mu(N, L, j) sums, over users whose password appeared at most j
/// times, the binomial tail
///   sum_{l=0}^{j-1} C(N-1, l) (1/(NL))^l ((NL-1)/(NL))^(N-l-1),
/// evaluated in log space with incremental term ratios so that N up to ~1e8
/// neither overflows nor underflows. `t` is the head rank used for the
/// Chernoff failure probability. Requires N*L > 1.
BoundsResult upper_bound_cracked(const FrequencyCorpus& corpus, unsigned j, double L,
                                 double eps, std::uint64_t t);

}  // namespace crackecon
