// Benchmark comparing the serial reference kernels against the OpenMP ones
// on the two real workloads: optimal-sensitivity squeezing sweeps and Fock
// oracle phi sweeps.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "oamsense/fock.hpp"
#include "oamsense/parallel.hpp"
#include "oamsense/sensitivity.hpp"
#include "oamsense/sweep.hpp"

namespace {

int max_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <typename Fn>
double time_seconds(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(const char* name, double serial, double parallel, int jobs,
            double max_abs_diff) {
  std::printf("%-24s serial %8.3fs  parallel(%d) %8.3fs  speedup %5.2fx  max|diff| %.3g\n",
              name, serial, jobs, parallel, serial / parallel, max_abs_diff);
}

void bench_optimal_sweep() {
  const auto rs = oam::linspace(0.5, 1.5, 1024);
  oam::NoiseConfig noise;
  noise.loss = 0.01;
  const auto eval = [&](double r) {
    return oam::optimal_sensitivity(oam::Variant::loss, r, 1, noise)
        .delta_phi_min;
  };
  std::vector<double> serial_rows;
  std::vector<double> parallel_rows;
  const double t_serial = time_seconds(
      [&] { serial_rows = oam::map_grid_serial<double>(rs, eval); });
  const int jobs = max_jobs();
  const double t_parallel = time_seconds(
      [&] { parallel_rows = oam::map_grid<double>(rs, eval, jobs); });
  double diff = 0.0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    diff = std::max(diff, std::abs(serial_rows[i] - parallel_rows[i]));
  }
  report("optimal sweep (1024 r)", t_serial, t_parallel, jobs, diff);
}

void bench_oracle_sweep() {
  const int cutoff = 80;
  const auto phis = oam::linspace(0.0, std::numbers::pi / 2.0, 128);
  std::vector<double> serial_rows;
  std::vector<double> parallel_rows;
  const double t_serial = time_seconds(
      [&] { serial_rows = oam::oracle_sweep(1.0, 1, phis, cutoff, 1); });
  const int jobs = max_jobs();
  const double t_parallel = time_seconds(
      [&] { parallel_rows = oam::oracle_sweep(1.0, 1, phis, cutoff, jobs); });
  double diff = 0.0;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    diff = std::max(diff, std::abs(serial_rows[i] - parallel_rows[i]));
  }
  report("oracle sweep (128 phi)", t_serial, t_parallel, jobs, diff);
}

}  // namespace

int main() {
  std::printf("jobs available: %d\n", max_jobs());
  bench_optimal_sweep();
  bench_oracle_sweep();
  return 0;
}
