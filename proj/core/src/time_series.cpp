#include "twofield/time_series.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "twofield/error.hpp"

namespace twofield {

void TimeSeries::push_back(double t, double value) {
  if (!std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "sample time is not finite");
  if (!samples_.empty() && !(t > samples_.back().t)) {
    throw Error(ErrorKind::InvalidArgument,
                "time series must be strictly increasing (got t = " + std::to_string(t) + ")");
  }
  samples_.push_back({t, value});
}

std::vector<double> uniform_grid(double t_max, int n_points) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw Error(ErrorKind::InvalidArgument, "t_max must be finite and positive");
  }
  if (n_points < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(n_points));
  const double step = t_max / static_cast<double>(n_points - 1);
  for (int i = 0; i < n_points; ++i) grid[static_cast<std::size_t>(i)] = step * i;
  grid.back() = t_max;
  return grid;
}

std::vector<double> evaluate_on_grid(std::span<const double> grid,
                                     const std::function<double(double)>& f,
                                     unsigned threads) {
  std::vector<double> values(grid.size());
  const std::size_t workers =
      std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(grid.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid[i]);
    return values;
  }

  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (grid.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(grid.size(), lo + chunk);
        try {
          for (std::size_t i = lo; i < hi; ++i) values[i] = f(grid[i]);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return values;
}

TimeSeries tabulate(std::span<const double> grid, const std::function<double(double)>& f,
                    unsigned threads) {
  const std::vector<double> values = evaluate_on_grid(grid, f, threads);
  TimeSeries series;
  for (std::size_t i = 0; i < grid.size(); ++i) series.push_back(grid[i], values[i]);
  return series;
}

}  // namespace twofield
