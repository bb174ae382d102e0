#pragma once

#include <cstdint>

namespace twofield {

/// P(N = n) for N ~ Poisson(mean), evaluated in log space.
double poisson_pmf(double mean, std::int64_t n);

/// P(N >= first_excluded) for N ~ Poisson(mean), summed directly over the
/// tail when the tail lies above the mean so small masses keep full
/// relative precision.
double poisson_tail_mass(double mean, std::int64_t first_excluded);

/// Contiguous index range [first, last] holding all but `tail_tol` of the
/// Poisson(mean) mass.
struct PoissonWindow {
  std::int64_t first = 0;
  std::int64_t last = 0;
  double retained_mass = 1.0;

  std::int64_t size() const { return last - first + 1; }
};

/// Central window mean -+ k*sqrt(mean + 1), starting at k = 8 and widening
/// until the discarded mass on both sides is below tail_tol.
PoissonWindow poisson_window(double mean, double tail_tol);

}  // namespace twofield
