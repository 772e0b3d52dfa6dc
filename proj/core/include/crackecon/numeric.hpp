#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>

namespace crackecon {

/// Compensated (Kahan) accumulator. Cumulative probabilities over supports
/// up to ~1e8 ranks lose tail mass under naive summation; the compensation
/// keeps the running error at a few ulps.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares of y on x with the coefficient of determination.
LinearFit linear_regression(std::span<const double> x, std::span<const double> y);

struct GssResult {
  double x = 0.0;
  double fx = 0.0;
};

/// Golden-section minimization of a unimodal function on [lo, hi].
/// Deterministic; the bracket width is at most tol on exit.
GssResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                     double tol);

inline GssResult golden_max(const std::function<double(double)>& f, double lo,
                            double hi, double tol) {
  GssResult r = golden_min([&](double x) { return -f(x); }, lo, hi, tol);
  r.fx = -r.fx;
  return r;
}

/// log of the binomial coefficient C(n, k) via lgamma.
inline double log_choose(double n, double k) {
  if (k < 0.0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace crackecon
