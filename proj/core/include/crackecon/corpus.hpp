#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace crackecon {

/// On-disk layouts for password frequency data.
enum class CorpusFormat {
  kRawCounts,       ///< one frequency per line, any order
  kRunlengthPairs,  ///< lines "frequency multiplicity"
};

/// Sorted password frequency list f_1 >= f_2 >= ... >= f_M.
///
/// Only frequencies are stored, never passwords or hashes. N is the number
/// of users, M the number of distinct passwords. Instances are immutable
/// after construction and safe to read from any number of threads.
class FrequencyCorpus {
 public:
  /// Builds a corpus from frequencies in any order; zero counts are
  /// rejected. Counts are sorted descending.
  static FrequencyCorpus from_counts(std::vector<std::uint64_t> counts);

  /// Parses `in` as UTF-8 text ('\n' or '\r\n' endings, '#' comments).
  /// Throws ParseError naming the line on malformed or empty input.
  static FrequencyCorpus parse(std::istream& in, CorpusFormat format);

  /// Writes the corpus as run-length pairs sorted by descending frequency.
  void serialize_runlength(std::ostream& out) const;

  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t n_users() const { return n_users_; }
  std::uint64_t n_distinct() const { return counts_.size(); }
  std::uint64_t max_frequency() const { return counts_.empty() ? 0 : counts_[0]; }
  bool empty() const { return counts_.empty(); }

  /// Empirical probability of the rank-i password (1-based).
  double probability(std::uint64_t rank) const;

  /// Draws m of the N users without replacement and returns the corpus of
  /// their passwords. Runs class-by-class with conditional hypergeometric
  /// draws, so memory stays O(M) regardless of N. Deterministic given seed.
  FrequencyCorpus subsample(std::uint64_t m, std::uint64_t seed) const;

 private:
  FrequencyCorpus(std::vector<std::uint64_t> counts, std::uint64_t n_users)
      : counts_(std::move(counts)), n_users_(n_users) {}

  std::vector<std::uint64_t> counts_;
  std::uint64_t n_users_ = 0;
};

/// Cumulative empirical probabilities lambda_t = (f_1 + ... + f_t) / N.
struct EmpiricalCdf {
  std::vector<double> lambda;
};

struct CorpusSummary {
  std::uint64_t n_users = 0;
  std::uint64_t n_distinct = 0;
  std::uint64_t max_frequency = 0;
};

EmpiricalCdf empirical_cdf(const FrequencyCorpus& corpus);
CorpusSummary summarize(const FrequencyCorpus& corpus);

}  // namespace crackecon
