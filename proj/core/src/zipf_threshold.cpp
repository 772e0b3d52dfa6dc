#include "crackecon/zipf_threshold.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "crackecon/errors.hpp"
#include "crackecon/numeric.hpp"

namespace crackecon {
namespace {

void validate_cdf_params(double y, double r, double a) {
  if (!(y > 0.0) || y > 1.0) throw DomainError("threshold requires 0 < y <= 1");
  if (!(r > 0.0) || !(r < 1.0)) throw DomainError("threshold requires 0 < r < 1");
  if (!(a > 0.0) || a > 1.0) throw DomainError("threshold requires 0 < a <= 1");
}

void validate_pdf_params(double z, double s) {
  if (!(s > 0.0) || !(s < 1.0)) throw DomainError("pdf threshold requires 0 < s < 1");
  if (!(z > 0.0)) throw DomainError("pdf threshold requires z > 0");
  if (!(1.0 - s - z > 0.0)) throw DomainError("pdf threshold requires 1 - s - z > 0");
}

// The Theorem objective: marginal-cost-over-marginal-revenue envelope
//   f(t) = (1 - y*(t-1)^r) / (y^a * (r*a) * t^(r*a - 1)).
// At t = 1 the (t-1)^r term vanishes exactly.
double objective(double t, double y, double r, double a) {
  const double ra = r * a;
  const double numer = 1.0 - (t > 1.0 ? y * std::pow(t - 1.0, r) : 0.0);
  const double denom = std::pow(y, a) * ra * std::pow(t, ra - 1.0);
  return numer / denom;
}

}  // namespace

CdfThresholdResult cdf_zipf_threshold(double y, double r, double a) {
  validate_cdf_params(y, r, a);

  const double zr = std::ceil(std::pow(1.0 / y, 1.0 / r)) + 1.0;
  CdfThresholdResult out;
  out.cutoff = static_cast<std::uint64_t>(std::min(zr, 1.8e19));

  auto f = [&](double t) { return objective(t, y, r, a); };
  auto f_log = [&](double lt) { return f(std::exp(lt)); };

  // Coarse log-grid scan to bracket the peak, then golden-section refine.
  const double lt_lo = 0.0;
  const double lt_hi = std::log(zr);
  const int kGridPoints = 256;
  int best_idx = 0;
  double best_val = f_log(lt_lo);
  for (int i = 1; i < kGridPoints; ++i) {
    const double lt = lt_lo + (lt_hi - lt_lo) * i / (kGridPoints - 1);
    const double val = f_log(lt);
    if (val > best_val) {
      best_val = val;
      best_idx = i;
    }
  }
  const double step = (lt_hi - lt_lo) / (kGridPoints - 1);
  const double bracket_lo = std::max(lt_lo, lt_lo + (best_idx - 1) * step);
  const double bracket_hi = std::min(lt_hi, lt_lo + (best_idx + 1) * step);
  const GssResult peak = golden_max(f_log, bracket_lo, bracket_hi, 1e-12);
  const double t_cont = std::exp(peak.x);

  // The threshold is exact evaluation at the integer neighbours of the
  // continuous optimum (plus the interval endpoints).
  std::vector<double> candidates{1.0, 2.0, zr, std::floor(t_cont), std::ceil(t_cont)};
  out.threshold = peak.fx;
  out.t_peak = t_cont;
  for (double t : candidates) {
    if (t < 1.0 || t > zr) continue;
    const double val = f(t);
    if (val > out.threshold) {
      out.threshold = val;
      out.t_peak = t;
    }
  }
  return out;
}

bool verify_cdf_threshold(double y, double r, double a, double ratio,
                          std::uint64_t t_max) {
  validate_cdf_params(y, r, a);
  if (!(ratio >= 0.0)) throw DomainError("ratio v/k must be >= 0");

  const double support_d = std::ceil(std::pow(1.0 / y, 1.0 / r));
  const std::uint64_t support =
      support_d >= 1.8e19 ? std::uint64_t{1} << 62
                          : static_cast<std::uint64_t>(support_d);
  const std::uint64_t limit = std::min(t_max, support);

  double lambda_prev = 0.0;
  double pow_prev = 0.0;
  for (std::uint64_t t = 1; t <= limit; ++t) {
    const double lambda_t = std::min(1.0, y * std::pow(static_cast<double>(t), r));
    const double pow_t = a == 1.0 ? lambda_t : std::pow(lambda_t, a);
    const double mr = ratio * (pow_t - pow_prev);
    const double mc = 1.0 - lambda_prev;
    if (mr < mc) return false;
    lambda_prev = lambda_t;
    pow_prev = pow_t;
  }
  return true;
}

PdfThresholdResult pdf_zipf_threshold(double z, double s) {
  validate_pdf_params(z, s);
  PdfThresholdResult out;
  out.t_peak = std::pow(z / (s * (1.0 - s)), 1.0 / (s - 1.0));
  out.t_all = std::pow(out.t_peak, s) / z - out.t_peak / (1.0 - s);
  return out;
}

PdfThresholdResult pdf_zipf_crack_bounds(double v, double k, double z, double s) {
  if (!(v >= 0.0)) throw DomainError("value v must be >= 0");
  if (!(k > 0.0)) throw DomainError("guess cost k must be > 0");
  PdfThresholdResult out = pdf_zipf_threshold(z, s);

  const double ratio = v / k;
  out.bracket_lo = ratio * z * (1.0 - s) / (1.0 - s - z);
  out.bracket_hi = std::pow(out.bracket_lo, 1.0 / s);

  if (ratio >= out.t_all) {
    out.fraction_lo = 1.0;
    out.fraction_hi = 1.0;
    return out;
  }
  const double lo =
      z * (std::pow(out.bracket_lo + 1.0, 1.0 - s) - 1.0) / (1.0 - s);
  const double hi = z * std::pow(out.bracket_lo, (1.0 - s) / s) / (1.0 - s);
  out.fraction_lo = std::clamp(lo, 0.0, 1.0);
  out.fraction_hi = std::clamp(hi, 0.0, 1.0);
  return out;
}

}  // namespace crackecon
