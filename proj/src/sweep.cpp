#include "oamsense/sweep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oamsense/parallel.hpp"

namespace oam {

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 2) {
    throw std::invalid_argument("grid needs at least 2 steps");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("grid range must be finite");
  }
  std::vector<double> xs(steps);
  for (int i = 0; i < steps; ++i) {
    xs[i] = lo + (hi - lo) * i / (steps - 1);
  }
  xs.back() = hi;
  return xs;
}

std::vector<double> SweepSpec::phi_grid() const {
  const double hi =
      phi_max ? *phi_max : std::numbers::pi / (2.0 * ell);
  return linspace(phi_min, hi, phi_steps);
}

std::vector<SignalRow> run_signal_sweep(const SweepSpec& spec) {
  const auto grid = spec.phi_grid();
  const Scenario base(spec.r, spec.ell, 0.0);
  return map_grid<SignalRow>(
      grid,
      [&](double phi) {
        const Scenario sc(base.r, base.ell, phi);
        return SignalRow{phi, signal_value(spec.variant, sc, spec.noise)};
      },
      spec.jobs);
}

std::vector<SensitivityRow> run_sensitivity_sweep(const SweepSpec& spec) {
  const auto grid = spec.phi_grid();
  const Scenario base(spec.r, spec.ell, 0.0);
  return map_grid<SensitivityRow>(
      grid,
      [&](double phi) {
        const Scenario sc(base.r, base.ell, phi);
        const SensitivityPoint p =
            sensitivity_closed(spec.variant, sc, spec.noise);
        return SensitivityRow{phi, p.delta_phi, p.signal};
      },
      spec.jobs);
}

std::vector<OptimalRow> run_optimal_sweep(const OptimalSweepSpec& spec) {
  const auto grid = linspace(spec.r_min, spec.r_max, spec.r_steps);
  if (spec.r_min < 0.0) {
    throw std::invalid_argument("squeezing range must be >= 0");
  }
  return map_grid<OptimalRow>(
      grid,
      [&](double r) {
        const Optimum opt =
            optimal_sensitivity(spec.variant, r, spec.ell, spec.noise);
        const Scenario sc(r, spec.ell, 0.0);
        const LimitSet lim = limits(sc);
        return OptimalRow{r,
                          sc.mean_photon_number(),
                          opt.phi_opt,
                          opt.delta_phi_min,
                          lim.heisenberg,
                          lim.shot_noise};
      },
      spec.jobs);
}

}  // namespace oam
