#include "crackecon/zipf_fit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "crackecon/errors.hpp"
#include "crackecon/numeric.hpp"

namespace crackecon {
namespace {

// R^2 of log10(lambda_t) against the line log10(y) + r*log10(t).
double log_log_r_squared(const FrequencyCorpus& corpus, double y, double r) {
  const EmpiricalCdf cdf = empirical_cdf(corpus);
  const double log_y = std::log10(y);
  KahanSum sy;
  for (std::size_t t = 0; t < cdf.lambda.size(); ++t) {
    sy.add(std::log10(cdf.lambda[t]));
  }
  const double my = sy.value() / static_cast<double>(cdf.lambda.size());
  KahanSum ss_res, ss_tot;
  for (std::size_t t = 0; t < cdf.lambda.size(); ++t) {
    const double ly = std::log10(cdf.lambda[t]);
    const double pred = log_y + r * std::log10(static_cast<double>(t + 1));
    ss_res.add((ly - pred) * (ly - pred));
    ss_tot.add((ly - my) * (ly - my));
  }
  return ss_tot.value() > 0.0 ? 1.0 - ss_res.value() / ss_tot.value() : 1.0;
}

}  // namespace

PdfZipfFit fit_pdf_zipf_lls(const FrequencyCorpus& corpus, std::uint64_t cutoff) {
  std::vector<double> xs, ys;
  const auto& counts = corpus.counts();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < cutoff) break;  // sorted descending
    xs.push_back(std::log10(static_cast<double>(i + 1)));
    ys.push_back(std::log10(static_cast<double>(counts[i])));
  }
  if (xs.size() < 2) {
    throw InsufficientDataError("pdf fit has " + std::to_string(xs.size()) +
                                " ranks with frequency >= " + std::to_string(cutoff) +
                                "; need at least 2");
  }
  const LinearFit line = linear_regression(xs, ys);

  PdfZipfFit fit;
  fit.s = -line.slope;
  fit.log_c = line.intercept;
  fit.z = std::pow(10.0, line.intercept) / static_cast<double>(corpus.n_users());
  fit.r_squared = line.r_squared;
  fit.cutoff = cutoff;
  fit.n_points = xs.size();
  fit.exponent_in_range = fit.s > 0.0 && fit.s < 1.0;
  return fit;
}

CdfZipfFit fit_cdf_zipf_lls(const FrequencyCorpus& corpus) {
  if (corpus.n_distinct() < 2) {
    throw InsufficientDataError("cdf fit needs at least 2 distinct frequencies");
  }
  const EmpiricalCdf cdf = empirical_cdf(corpus);
  std::vector<double> xs(cdf.lambda.size()), ys(cdf.lambda.size());
  for (std::size_t t = 0; t < cdf.lambda.size(); ++t) {
    xs[t] = std::log10(static_cast<double>(t + 1));
    ys[t] = std::log10(cdf.lambda[t]);
  }
  const LinearFit line = linear_regression(xs, ys);

  CdfZipfFit fit;
  fit.y = std::pow(10.0, line.intercept);
  fit.r = line.slope;
  fit.r_squared = line.r_squared;
  fit.method = CdfFitMethod::kLls;
  fit.ks = ks_distance(corpus, fit.y, fit.r);
  fit.exponent_in_range = fit.r > 0.0 && fit.r < 1.0;
  return fit;
}

double ks_distance(const FrequencyCorpus& corpus, double y, double r) {
  if (!(y > 0.0) || !(r > 0.0)) throw DomainError("ks distance requires y, r > 0");
  const double n = static_cast<double>(corpus.n_users());
  double worst = 0.0;
  std::uint64_t cum = 0;
  std::uint64_t t = 0;
  for (std::uint64_t f : corpus.counts()) {
    ++t;
    cum += f;
    const double empirical = static_cast<double>(cum) / n;
    const double model = std::min(1.0, y * std::pow(static_cast<double>(t), r));
    worst = std::max(worst, std::abs(empirical - model));
  }
  return worst;
}

CdfZipfFit fit_cdf_zipf_gss(const FrequencyCorpus& corpus, const GssOptions& opts) {
  if (corpus.n_distinct() < 2) {
    throw InsufficientDataError("cdf fit needs at least 2 distinct frequencies");
  }
  if (!(opts.r_lo > 0.0) || !(opts.r_hi > opts.r_lo) || opts.r_hi >= 1.0) {
    throw DomainError("gss requires 0 < r_lo < r_hi < 1");
  }

  constexpr double kYLo = 1e-6;
  constexpr double kYHi = 1.0;

  auto best_y_for = [&](double r) {
    return golden_min([&](double y) { return ks_distance(corpus, y, r); }, kYLo,
                      kYHi, opts.tol);
  };

  // A coarse scan picks the bracket so the outer golden-section search is
  // not fooled by a secondary dip in r.
  const int kScan = 32;
  double best_r = opts.r_lo;
  double best_ks = best_y_for(opts.r_lo).fx;
  for (int i = 1; i < kScan; ++i) {
    const double r = opts.r_lo + (opts.r_hi - opts.r_lo) * i / (kScan - 1);
    const double ks = best_y_for(r).fx;
    if (ks < best_ks) {
      best_ks = ks;
      best_r = r;
    }
  }
  const double span = (opts.r_hi - opts.r_lo) / (kScan - 1);
  const GssResult outer = golden_min(
      [&](double r) { return best_y_for(r).fx; },
      std::max(opts.r_lo, best_r - span), std::min(opts.r_hi, best_r + span),
      opts.tol);

  CdfZipfFit fit;
  fit.r = outer.fx <= best_ks ? outer.x : best_r;
  const GssResult inner = best_y_for(fit.r);
  fit.y = inner.x;
  fit.ks = inner.fx;
  fit.method = CdfFitMethod::kGssNested;
  fit.r_squared = log_log_r_squared(corpus, fit.y, fit.r);
  fit.exponent_in_range = fit.r > 0.0 && fit.r < 1.0;
  return fit;
}

}  // namespace crackecon
