#include "crackecon/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "crackecon/errors.hpp"
#include "crackecon/rng.hpp"

namespace crackecon {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  return s;
}

std::uint64_t parse_positive(std::string_view token, std::size_t line,
                             const char* what) {
  if (!token.empty() && token.front() == '-') {
    throw ParseError(line, std::string("negative ") + what + " '" +
                               std::string(token) + "'");
  }
  std::uint64_t value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("expected a positive integer ") + what +
                               ", got '" + std::string(token) + "'");
  }
  if (value == 0) {
    throw ParseError(line, std::string("zero ") + what + " is not allowed");
  }
  return value;
}

}  // namespace

FrequencyCorpus FrequencyCorpus::from_counts(std::vector<std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) {
    if (c == 0) throw DomainError("corpus counts must be positive");
    total += c;
  }
  std::sort(counts.begin(), counts.end(), std::greater<>());
  return FrequencyCorpus(std::move(counts), total);
}

FrequencyCorpus FrequencyCorpus::parse(std::istream& in, CorpusFormat format) {
  std::vector<std::uint64_t> counts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    if (format == CorpusFormat::kRawCounts) {
      counts.push_back(parse_positive(body, line_no, "count"));
      continue;
    }

    const auto split = body.find_first_of(" \t");
    if (split == std::string_view::npos) {
      throw ParseError(line_no, "expected 'frequency multiplicity', got '" +
                                    std::string(body) + "'");
    }
    const std::uint64_t freq = parse_positive(body.substr(0, split), line_no, "frequency");
    const std::uint64_t mult =
        parse_positive(trim(body.substr(split + 1)), line_no, "multiplicity");
    for (std::uint64_t i = 0; i < mult; ++i) counts.push_back(freq);
  }
  if (counts.empty()) {
    throw ParseError(line_no + 1, "input contains no counts");
  }
  return from_counts(std::move(counts));
}

void FrequencyCorpus::serialize_runlength(std::ostream& out) const {
  // counts_ is sorted descending, so equal frequencies are adjacent.
  std::size_t i = 0;
  while (i < counts_.size()) {
    std::size_t j = i;
    while (j < counts_.size() && counts_[j] == counts_[i]) ++j;
    out << counts_[i] << ' ' << (j - i) << '\n';
    i = j;
  }
}

double FrequencyCorpus::probability(std::uint64_t rank) const {
  if (rank == 0 || rank > counts_.size()) {
    throw RangeError("rank " + std::to_string(rank) + " outside [1, " +
                     std::to_string(counts_.size()) + "]");
  }
  return static_cast<double>(counts_[rank - 1]) / static_cast<double>(n_users_);
}

FrequencyCorpus FrequencyCorpus::subsample(std::uint64_t m, std::uint64_t seed) const {
  if (m > n_users_) {
    throw RangeError("subsample size " + std::to_string(m) + " exceeds corpus size " +
                     std::to_string(n_users_));
  }
  Rng rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(counts_.size());
  std::uint64_t remaining = n_users_;
  std::uint64_t need = m;
  for (std::uint64_t f : counts_) {
    if (need == 0) break;
    const std::uint64_t x = rng.hypergeometric(remaining, f, need);
    if (x > 0) out.push_back(x);
    need -= x;
    remaining -= f;
  }
  return from_counts(std::move(out));
}

EmpiricalCdf empirical_cdf(const FrequencyCorpus& corpus) {
  EmpiricalCdf cdf;
  cdf.lambda.reserve(corpus.n_distinct());
  std::uint64_t cum = 0;
  const double n = static_cast<double>(corpus.n_users());
  for (std::uint64_t f : corpus.counts()) {
    cum += f;
    cdf.lambda.push_back(static_cast<double>(cum) / n);
  }
  return cdf;
}

CorpusSummary summarize(const FrequencyCorpus& corpus) {
  return CorpusSummary{corpus.n_users(), corpus.n_distinct(), corpus.max_frequency()};
}

}  // namespace crackecon
