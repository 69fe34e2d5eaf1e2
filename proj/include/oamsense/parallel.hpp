#pragma once

#include <cstddef>
#include <vector>

namespace oam {

/// Serial reference for map_grid; kept for testing and benchmarking against
/// the OpenMP kernel.
template <typename Row, typename Fn>
std::vector<Row> map_grid_serial(const std::vector<double>& xs, Fn&& fn) {
  std::vector<Row> rows(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    rows[i] = fn(xs[i]);
  }
  return rows;
}

/// Evaluates fn over the grid with up to `jobs` OpenMP threads. Each row is
/// an independent pure evaluation written by grid index, so the result is
/// identical to map_grid_serial regardless of thread count.
template <typename Row, typename Fn>
std::vector<Row> map_grid(const std::vector<double>& xs, Fn&& fn,
                          int jobs = 1) {
  if (jobs <= 1 || xs.size() < 2) {
    return map_grid_serial<Row>(xs, fn);
  }
  std::vector<Row> rows(xs.size());
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    rows[i] = fn(xs[i]);
  }
  return rows;
}

}  // namespace oam
