#include "crackecon/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "crackecon/errors.hpp"
#include "crackecon/numeric.hpp"
#include "crackecon/rng.hpp"

namespace crackecon {
namespace {

// Exact prefix sums are materialized up to this many ranks; beyond it the
// PDF-Zipf cumulative uses an Euler-Maclaurin tail whose truncation error at
// this crossover is far below 1e-12.
constexpr std::uint64_t kPdfHeadCap = std::uint64_t{1} << 20;

// Supports larger than this cannot be walked or sampled in reasonable time.
constexpr std::uint64_t kWalkableSupportCap = std::uint64_t{1} << 33;

// sum_{i=a+1}^{b} i^(-s) for b >= a, via Euler-Maclaurin with two
// correction terms, valid for 0 < s < 1 and large a.
double power_sum_tail(double a, double b, double s) {
  if (b <= a) return 0.0;
  const double integral = (std::pow(b, 1.0 - s) - std::pow(a, 1.0 - s)) / (1.0 - s);
  const double boundary = 0.5 * (std::pow(b, -s) - std::pow(a, -s));
  const double curvature =
      -(s / 12.0) * (std::pow(b, -s - 1.0) - std::pow(a, -s - 1.0));
  return integral + boundary + curvature;
}

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

struct PasswordDistribution::Impl {
  Kind kind = Kind::kEmpirical;

  // Empirical: prefix[t] = f_1 + ... + f_t, prefix[0] = 0.
  std::vector<std::uint64_t> prefix;
  std::uint64_t n_users = 0;

  // CDF-Zipf.
  double y = 0.0;
  double r = 0.0;

  // PDF-Zipf.
  double z = 0.0;
  double s = 0.0;
  std::vector<double> pdf_prefix;  // exact sums for ranks 1..head_n
  std::uint64_t head_n = 0;
  double head_sum = 0.0;
  double total_mass = 1.0;  // lambda at the last guessable rank

  std::uint64_t support = 0;

  double lambda_at(std::uint64_t t) const {
    if (t == 0) return 0.0;
    if (t >= support) t = support;
    switch (kind) {
      case Kind::kEmpirical:
        return static_cast<double>(prefix[t]) / static_cast<double>(n_users);
      case Kind::kCdfZipf:
        return std::min(1.0, y * std::pow(static_cast<double>(t), r));
      case Kind::kPdfZipf:
        if (t <= head_n) return pdf_prefix[t - 1];
        return std::min(total_mass,
                        head_sum + z * power_sum_tail(static_cast<double>(head_n),
                                                      static_cast<double>(t), s));
    }
    return 0.0;
  }

  double p_at(std::uint64_t t) const {
    switch (kind) {
      case Kind::kEmpirical:
        return static_cast<double>(prefix[t] - prefix[t - 1]) /
               static_cast<double>(n_users);
      case Kind::kCdfZipf:
        return lambda_at(t) - lambda_at(t - 1);
      case Kind::kPdfZipf:
        return z * std::pow(static_cast<double>(t), -s);
    }
    return 0.0;
  }
};

PasswordDistribution PasswordDistribution::empirical(const FrequencyCorpus& corpus) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kEmpirical;
  impl->n_users = corpus.n_users();
  impl->prefix.reserve(corpus.n_distinct() + 1);
  impl->prefix.push_back(0);
  std::uint64_t cum = 0;
  for (std::uint64_t f : corpus.counts()) {
    cum += f;
    impl->prefix.push_back(cum);
  }
  impl->support = corpus.n_distinct();
  return PasswordDistribution(std::move(impl));
}

PasswordDistribution PasswordDistribution::cdf_zipf(double y, double r) {
  if (!(y > 0.0) || y > 1.0) {
    throw DomainError("cdf_zipf requires 0 < y <= 1 (lambda(1) = y must not exceed 1)");
  }
  if (!(r > 0.0)) throw DomainError("cdf_zipf requires r > 0");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kCdfZipf;
  impl->y = y;
  impl->r = r;
  const double n_max = std::ceil(std::pow(1.0 / y, 1.0 / r));
  if (n_max >= static_cast<double>(std::numeric_limits<std::uint64_t>::max())) {
    throw UnsupportedError("cdf_zipf support overflows a 64-bit rank");
  }
  impl->support = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(n_max));
  return PasswordDistribution(std::move(impl));
}

PasswordDistribution PasswordDistribution::pdf_zipf(double z, double s) {
  if (!(z > 0.0) || z > 1.0) throw DomainError("pdf_zipf requires 0 < z <= 1");
  if (!(s > 0.0) || !(s < 1.0)) throw DomainError("pdf_zipf requires 0 < s < 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kPdfZipf;
  impl->z = z;
  impl->s = s;

  // Accumulate exact mass until it would pass 1 or the head cap is reached.
  KahanSum sum;
  std::uint64_t t = 0;
  std::uint64_t n_max = 0;
  while (t < kPdfHeadCap) {
    const double pt = z * std::pow(static_cast<double>(t + 1), -s);
    if (sum.value() + pt > 1.0) {
      n_max = t;
      break;
    }
    sum.add(pt);
    ++t;
    impl->pdf_prefix.push_back(sum.value());
  }
  impl->head_n = t;
  impl->head_sum = sum.value();

  if (n_max == 0) {
    // The support extends past the head table: find the largest n with
    // S(n) <= 1 on the Euler-Maclaurin continuation (monotone in n).
    const double budget = 1.0 - impl->head_sum;
    double lo = static_cast<double>(impl->head_n);
    double hi = lo * 2.0;
    while (z * power_sum_tail(static_cast<double>(impl->head_n), hi, s) <= budget) {
      hi *= 2.0;
      if (hi > 1e18) throw UnsupportedError("pdf_zipf support exceeds 1e18 ranks");
    }
    while (hi - lo > 0.5) {
      const double mid = 0.5 * (lo + hi);
      if (z * power_sum_tail(static_cast<double>(impl->head_n), mid, s) <= budget) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    n_max = static_cast<std::uint64_t>(lo);
    auto mass_at = [&](std::uint64_t n) {
      return impl->head_sum + z * power_sum_tail(static_cast<double>(impl->head_n),
                                                 static_cast<double>(n), s);
    };
    while (mass_at(n_max + 1) <= 1.0) ++n_max;
    while (n_max > impl->head_n && mass_at(n_max) > 1.0) --n_max;
    impl->total_mass = std::min(1.0, mass_at(n_max));
  } else {
    impl->total_mass = impl->head_sum;
  }
  impl->support = std::max<std::uint64_t>(1, n_max);
  return PasswordDistribution(std::move(impl));
}

PasswordDistribution::Kind PasswordDistribution::kind() const { return impl_->kind; }

std::uint64_t PasswordDistribution::support_size() const { return impl_->support; }

double PasswordDistribution::tail_mass() const {
  return impl_->kind == Kind::kPdfZipf ? std::max(0.0, 1.0 - impl_->total_mass) : 0.0;
}

double PasswordDistribution::p(std::uint64_t t) const {
  if (t == 0 || t > impl_->support) {
    throw RangeError("rank " + std::to_string(t) + " outside [1, " +
                     std::to_string(impl_->support) + "]");
  }
  return impl_->p_at(t);
}

double PasswordDistribution::lambda(std::uint64_t t) const {
  if (t > impl_->support) {
    throw RangeError("rank " + std::to_string(t) + " outside [0, " +
                     std::to_string(impl_->support) + "]");
  }
  return impl_->lambda_at(t);
}

FrequencyCorpus PasswordDistribution::sample(std::uint64_t n, std::uint64_t seed) const {
  if (impl_->support > kWalkableSupportCap) {
    throw UnsupportedError("support too large to sample (" +
                           std::to_string(impl_->support) + " ranks)");
  }
  Rng rng(seed);
  std::vector<std::uint64_t> counts;
  if (n == 0) return FrequencyCorpus::from_counts(std::move(counts));

  switch (impl_->kind) {
    case Kind::kEmpirical: {
      // Integer inverse transform over the exact user prefix sums.
      std::vector<std::uint64_t> ranks(n);
      for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t u = rng.below(impl_->n_users);
        const auto it =
            std::upper_bound(impl_->prefix.begin(), impl_->prefix.end(), u);
        ranks[i] = static_cast<std::uint64_t>(it - impl_->prefix.begin());
      }
      std::sort(ranks.begin(), ranks.end());
      for (std::uint64_t i = 0; i < n;) {
        std::uint64_t j = i;
        while (j < n && ranks[j] == ranks[i]) ++j;
        counts.push_back(j - i);
        i = j;
      }
      break;
    }
    case Kind::kCdfZipf: {
      // Closed-form inverse of lambda(t) = y * t^r.
      std::vector<std::uint64_t> ranks(n);
      for (std::uint64_t i = 0; i < n; ++i) {
        const double u = rng.uniform01_open();
        const double x = std::ceil(std::pow(u / impl_->y, 1.0 / impl_->r));
        ranks[i] = std::clamp<std::uint64_t>(
            x <= 1.0 ? 1 : static_cast<std::uint64_t>(x), 1, impl_->support);
      }
      std::sort(ranks.begin(), ranks.end());
      for (std::uint64_t i = 0; i < n;) {
        std::uint64_t j = i;
        while (j < n && ranks[j] == ranks[i]) ++j;
        counts.push_back(j - i);
        i = j;
      }
      break;
    }
    case Kind::kPdfZipf: {
      // Conditional binomial walk down the ranks; the running remainder
      // keeps the joint distribution exactly multinomial.
      std::uint64_t remaining = n;
      for (std::uint64_t t = 1; t <= impl_->support && remaining > 0; ++t) {
        const double rest = 1.0 - impl_->lambda_at(t - 1);
        if (rest <= 0.0) break;
        const double p_cond = std::min(1.0, impl_->p_at(t) / rest);
        const std::uint64_t x = rng.binomial(remaining, p_cond);
        if (x > 0) counts.push_back(x);
        remaining -= x;
      }
      // Draws past the guessable support: each is its own junk password.
      for (std::uint64_t i = 0; i < remaining; ++i) counts.push_back(1);
      break;
    }
  }
  return FrequencyCorpus::from_counts(std::move(counts));
}

std::string PasswordDistribution::describe() const {
  switch (impl_->kind) {
    case Kind::kEmpirical:
      return "empirical:N=" + std::to_string(impl_->n_users) +
             ",M=" + std::to_string(impl_->support);
    case Kind::kCdfZipf:
      return "cdf_zipf:" + format_param(impl_->y) + "," + format_param(impl_->r);
    case Kind::kPdfZipf:
      return "pdf_zipf:" + format_param(impl_->z) + "," + format_param(impl_->s);
  }
  return {};
}

}  // namespace crackecon
