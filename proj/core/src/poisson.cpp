#include "twofield/poisson.hpp"

#include <algorithm>
#include <cmath>

#include "twofield/error.hpp"

namespace twofield {

double poisson_pmf(double mean, std::int64_t n) {
  if (n < 0) return 0.0;
  if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
  const double k = static_cast<double>(n);
  return std::exp(-mean + k * std::log(mean) - std::lgamma(k + 1.0));
}

double poisson_tail_mass(double mean, std::int64_t first_excluded) {
  if (first_excluded <= 0) return 1.0;
  if (mean == 0.0) return 0.0;
  if (static_cast<double>(first_excluded) <= mean + 1.0) {
    double head = 0.0;
    for (std::int64_t n = 0; n < first_excluded; ++n) head += poisson_pmf(mean, n);
    return std::max(0.0, 1.0 - head);
  }
  // Terms decrease monotonically above the mean; stop once they no longer
  // change the sum.
  double tail = 0.0;
  double term = poisson_pmf(mean, first_excluded);
  for (std::int64_t n = first_excluded; term > 0.0; ++n) {
    tail += term;
    if (term < tail * 1e-17) break;
    term *= mean / static_cast<double>(n + 1);
  }
  return tail;
}

PoissonWindow poisson_window(double mean, double tail_tol) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw Error(ErrorKind::InvalidArgument, "Poisson mean must be finite and >= 0");
  }
  if (mean == 0.0) return {0, 0, 1.0};

  const double width_unit = std::sqrt(mean + 1.0);
  for (double k = 8.0;; k += 2.0) {
    const auto first = static_cast<std::int64_t>(
        std::max(0.0, std::floor(mean - k * width_unit)));
    const auto last = static_cast<std::int64_t>(std::ceil(mean + k * width_unit));
    const double upper = poisson_tail_mass(mean, last + 1);
    // Terms also decrease going down from below the mean.
    double lower = 0.0;
    for (std::int64_t n = first - 1; n >= 0; --n) {
      const double term = poisson_pmf(mean, n);
      lower += term;
      if (term == 0.0 || term < lower * 1e-17) break;
    }
    if (upper + lower < tail_tol) return {first, last, 1.0 - upper - lower};
  }
}

}  // namespace twofield
