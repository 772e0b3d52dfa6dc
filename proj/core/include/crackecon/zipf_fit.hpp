#pragma once

#include <cstdint>
#include <optional>

#include "crackecon/corpus.hpp"

namespace crackecon {

/// PDF-Zipf fit f_i = C / i^s obtained by least squares in log10 space.
struct PdfZipfFit {
  double s = 0.0;         ///< exponent (negated regression slope)
  double log_c = 0.0;     ///< log10 of the scale constant C
  double z = 0.0;         ///< C / N, probability of the rank-1 password
  double r_squared = 0.0;
  std::uint64_t cutoff = 0;   ///< minimum frequency included in the fit
  std::uint64_t n_points = 0; ///< ranks that survived the cutoff
  bool exponent_in_range = false;  ///< s in (0,1); fits outside are flagged
};

enum class CdfFitMethod { kLls, kGssNested };

/// CDF-Zipf fit lambda_t = y * t^r with fit-quality diagnostics.
struct CdfZipfFit {
  double y = 0.0;
  double r = 0.0;
  double r_squared = 0.0;  ///< of the log-log line (post hoc for GSS)
  double ks = 0.0;         ///< Kolmogorov-Smirnov distance of the fit
  CdfFitMethod method = CdfFitMethod::kLls;
  bool exponent_in_range = false;  ///< r in (0,1)
};

/// Least-squares PDF-Zipf fit over ranks with f_i >= cutoff.
/// Throws InsufficientDataError with fewer than two usable points.
PdfZipfFit fit_pdf_zipf_lls(const FrequencyCorpus& corpus, std::uint64_t cutoff = 5);

/// Least-squares CDF-Zipf fit over all ranks. Requires M >= 2.
CdfZipfFit fit_cdf_zipf_lls(const FrequencyCorpus& corpus);

struct GssOptions {
  double r_lo = 0.01;
  double r_hi = 0.99;
  double tol = 1e-6;
};

/// Nested golden-section search minimizing the KS distance: an outer search
/// on r, and for each candidate r an inner search on y over [1e-6, 1].
/// Deterministic. The returned distance never exceeds the distance at any
/// point probed during the search.
CdfZipfFit fit_cdf_zipf_gss(const FrequencyCorpus& corpus, const GssOptions& opts = {});

/// sup_t |empirical lambda_t - min(1, y * t^r)| over ranks t = 1..M.
double ks_distance(const FrequencyCorpus& corpus, double y, double r);

}  // namespace crackecon
