#include "crackecon/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "crackecon/errors.hpp"
#include "crackecon/numeric.hpp"

namespace crackecon {
namespace {

// sum_{l=0}^{j-1} C(N-1, l) (1/(NL))^l ((NL-1)/(NL))^(N-l-1), the
// probability that a password with true probability exactly 1/(NL) is seen
// at most j-1 more times. The l=0 term is exponentiated from log space and
// successive terms follow from the exact ratio
//   term_{l+1} / term_l = (N - 1 - l) / ((l + 1) * (NL - 1)),
// so nothing overflows even at N ~ 1e8.
double binomial_tail_factor(double n_users, unsigned j, double nl) {
  if (j == 0) return 0.0;
  const double log_term0 = (n_users - 1.0) * std::log1p(-1.0 / nl);
  double term = 1.0;
  double sum = 1.0;
  for (unsigned l = 0; l + 1 < j; ++l) {
    term *= (n_users - 1.0 - static_cast<double>(l)) /
            ((static_cast<double>(l) + 1.0) * (nl - 1.0));
    sum += term;
  }
  return std::min(1.0, std::exp(log_term0) * sum);
}

}  // namespace

BoundsResult lower_bound_cracked(const FrequencyCorpus& corpus, unsigned j, double L) {
  if (j < 1) throw DomainError("lower bound requires j >= 1");
  if (!(L > 0.0)) throw DomainError("lower bound requires L > 0");

  const double n_users = static_cast<double>(corpus.n_users());
  std::uint64_t head = 0;
  for (std::uint64_t f : corpus.counts()) {
    if (f < j) break;  // counts are sorted descending
    head += f;
  }
  // (j-1)! * L^(j-1) in log space; it can dwarf N for aggressive j.
  const double log_denom =
      std::lgamma(static_cast<double>(j)) + (j - 1) * std::log(L);
  const double correction = std::exp(std::log(n_users) - log_denom);

  BoundsResult out;
  out.raw_count = static_cast<double>(head) - correction;
  out.bound_count = std::max(0.0, out.raw_count);
  out.bound_fraction = n_users > 0.0 ? out.bound_count / n_users : 0.0;
  out.v_over_k = n_users * L;
  return out;
}

BoundsResult upper_bound_cracked(const FrequencyCorpus& corpus, unsigned j, double L,
                                 double eps, std::uint64_t t) {
  if (!(L > 0.0)) throw DomainError("upper bound requires L > 0");
  if (!(eps >= 0.0)) throw DomainError("upper bound requires eps >= 0");
  if (t > corpus.n_distinct()) {
    throw RangeError("head rank " + std::to_string(t) + " exceeds M = " +
                     std::to_string(corpus.n_distinct()));
  }
  const double n_users = static_cast<double>(corpus.n_users());
  const double nl = n_users * L;
  if (!(nl > 1.0)) throw DomainError("upper bound requires N*L > 1");

  std::uint64_t above = 0;   // users whose password has f_i > j
  std::uint64_t at_most = 0; // users with 0 < f_i <= j
  std::uint64_t head_users = 0;
  std::uint64_t rank = 0;
  for (std::uint64_t f : corpus.counts()) {
    ++rank;
    if (rank <= t) head_users += f;
    if (f > j) {
      above += f;
    } else {
      at_most += f;
    }
  }

  BoundsResult out;
  const double q = binomial_tail_factor(n_users, j, nl);
  out.mu = static_cast<double>(at_most) * q;
  out.bound_count = static_cast<double>(above) + out.mu;
  out.raw_count = out.bound_count;
  out.bound_fraction = n_users > 0.0 ? out.bound_count / n_users : 0.0;

  // Chernoff term with the empirical head mass standing in for the unknown
  // true head probability.
  const double head_mass = n_users > 0.0 ? static_cast<double>(head_users) / n_users : 0.0;
  const double exponent =
      -(eps * eps) * n_users * head_mass / (2.0 * (1.0 + eps) * (1.0 + eps));
  out.failure_prob = std::clamp(std::exp(exponent), 0.0, 1.0);
  out.v_over_k = nl * (1.0 - (1.0 + eps) * head_mass);
  return out;
}

}  // namespace crackecon
