#pragma once

#include <functional>
#include <span>
#include <vector>

namespace twofield {

struct Sample {
  double t = 0.0;
  double value = 0.0;
};

/// Ordered (t, value) records with strictly increasing t.
class TimeSeries {
 public:
  TimeSeries() = default;

  /// Throws InvalidArgument unless t exceeds the last stored time.
  void push_back(double t, double value);

  std::span<const Sample> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }
  auto begin() const noexcept { return samples_.begin(); }
  auto end() const noexcept { return samples_.end(); }

 private:
  std::vector<Sample> samples_;
};

/// n_points equally spaced times from 0 to t_max inclusive.
std::vector<double> uniform_grid(double t_max, int n_points);

/// Evaluates f on every grid point. Work is split into contiguous chunks
/// across `threads` workers; the result is assembled in grid order, so the
/// output does not depend on the thread count. f must be safe to call
/// concurrently.
std::vector<double> evaluate_on_grid(std::span<const double> grid,
                                     const std::function<double(double)>& f,
                                     unsigned threads = 1);

TimeSeries tabulate(std::span<const double> grid, const std::function<double(double)>& f,
                    unsigned threads = 1);

}  // namespace twofield
