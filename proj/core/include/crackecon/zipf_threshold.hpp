#pragma once

#include <cstdint>

namespace crackecon {

/// Critical v/k ratio above which a rational attacker cracks every password
/// drawn from CDF-Zipf(y, r), together with the cutoff rank Z beyond which
/// the underlying objective provably decreases.
struct CdfThresholdResult {
  double threshold = 0.0;       ///< T(y, r, a)
  std::uint64_t cutoff = 0;     ///< Z = ceil((1/y)^(1/r)) + 1
  double t_peak = 0.0;          ///< maximizing guessing threshold
};

/// T(y, r, a) = max over t in [1, Z] of
///   (1 - y*(t-1)^r) / (y^a * (r*a) * t^(r*a - 1)).
/// The maximum is located by golden-section search over continuous t on a
/// log scale and then evaluated exactly at the integer neighbours of the
/// continuous optimum. Requires 0 < y <= 1, 0 < r < 1, 0 < a <= 1.
CdfThresholdResult cdf_zipf_threshold(double y, double r, double a);

/// Exhaustive check that marginal revenue covers marginal cost at every
/// integer threshold t in [1, min(t_max, support)] of the truncated
/// CDF-Zipf model when v/k = ratio:
///   ratio * (lambda_t^a - lambda_{t-1}^a) >= 1 - lambda_{t-1}.
bool verify_cdf_threshold(double y, double r, double a, double ratio,
                          std::uint64_t t_max);

/// PDF-Zipf crack-everything threshold and, for a given v/k below it, the
/// bracket on the attacker's optimal threshold plus bounds on the cracked
/// fraction. All closed forms; valid for 0 < s < 1, z > 0, 1 - s - z > 0.
struct PdfThresholdResult {
  double t_all = 0.0;        ///< v/k above which everything is cracked
  double t_peak = 0.0;       ///< (z / (s*(1-s)))^(1/(s-1))
  double bracket_lo = 0.0;   ///< v*z*(1-s) / (k*(1-s-z))
  double bracket_hi = 0.0;   ///< bracket_lo^(1/s)
  double fraction_lo = 0.0;  ///< clamped to [0, 1]
  double fraction_hi = 0.0;  ///< clamped to [0, 1]
};

/// Fills t_all and t_peak only.
PdfThresholdResult pdf_zipf_threshold(double z, double s);

/// Fills the bracket and fraction bounds for the given v and k. When
/// v/k >= t_all the fraction bounds clamp to 1.
PdfThresholdResult pdf_zipf_crack_bounds(double v, double k, double z, double s);

}  // namespace crackecon
