#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "crackecon/corpus.hpp"

namespace crackecon {

/// A password probability model over integer ranks 1..support_size().
///
/// Three variants share the interface:
///  - empirical:  p(t) = f_t / N from a frequency corpus;
///  - CDF-Zipf:   lambda(t) = min(1, y * t^r), truncated at the first rank
///                where the model reaches 1 so the final atom absorbs the
///                remainder and probabilities sum to 1 exactly;
///  - PDF-Zipf:   p(t) = z / t^s, truncated at the largest support keeping
///                the total mass <= 1; the remainder sits in an unguessable
///                tail of negligible-probability passwords that an attacker
///                cannot productively guess and tail_mass() reports.
///
/// Instances are immutable and cheap to copy (shared internals).
class PasswordDistribution {
 public:
  enum class Kind { kEmpirical, kCdfZipf, kPdfZipf };

  static PasswordDistribution empirical(const FrequencyCorpus& corpus);
  static PasswordDistribution cdf_zipf(double y, double r);
  static PasswordDistribution pdf_zipf(double z, double s);

  Kind kind() const;
  /// Number of guessable ranks.
  std::uint64_t support_size() const;
  /// Probability mass beyond the guessable support (PDF-Zipf only).
  double tail_mass() const;

  /// Probability of the rank-t password, t in [1, support_size()].
  double p(std::uint64_t t) const;
  /// Cumulative probability of the top t ranks; lambda(0) = 0.
  double lambda(std::uint64_t t) const;

  /// Frequency corpus of n i.i.d. draws. Deterministic given seed. Draws
  /// landing in a PDF-Zipf unguessable tail become distinct singletons.
  FrequencyCorpus sample(std::uint64_t n, std::uint64_t seed) const;

  /// One-line description for output metadata, e.g. "cdf_zipf:0.0211,0.2166".
  std::string describe() const;

 private:
  struct Impl;
  explicit PasswordDistribution(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace crackecon
