#include "crackecon/numeric.hpp"

#include <cassert>
#include <cmath>

#include "crackecon/errors.hpp"

namespace crackecon {

LinearFit linear_regression(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  if (n < 2) throw InsufficientDataError("regression needs at least 2 points");

  KahanSum sx, sy;
  for (std::size_t i = 0; i < n; ++i) {
    sx.add(x[i]);
    sy.add(y[i]);
  }
  const double mx = sx.value() / static_cast<double>(n);
  const double my = sy.value() / static_cast<double>(n);

  KahanSum sxx, sxy;
  for (std::size_t i = 0; i < n; ++i) {
    sxx.add((x[i] - mx) * (x[i] - mx));
    sxy.add((x[i] - mx) * (y[i] - my));
  }
  if (sxx.value() == 0.0) {
    throw InsufficientDataError("regression abscissae are all identical");
  }

  LinearFit fit;
  fit.slope = sxy.value() / sxx.value();
  fit.intercept = my - fit.slope * mx;

  KahanSum ss_res, ss_tot;
  for (std::size_t i = 0; i < n; ++i) {
    const double resid = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res.add(resid * resid);
    ss_tot.add((y[i] - my) * (y[i] - my));
  }
  fit.r_squared = ss_tot.value() > 0.0 ? 1.0 - ss_res.value() / ss_tot.value() : 1.0;
  return fit;
}

GssResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                     double tol) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  GssResult best{xm, fm};
  if (fc < best.fx) best = {c, fc};
  if (fd < best.fx) best = {d, fd};
  return best;
}

}  // namespace crackecon
