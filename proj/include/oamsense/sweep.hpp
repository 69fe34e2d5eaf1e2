#pragma once

#include <optional>
#include <vector>

#include "oamsense/sensitivity.hpp"

namespace oam {

/// Inclusive evenly spaced grid with steps >= 2 points.
std::vector<double> linspace(double lo, double hi, int steps);

/// One signal or sensitivity sweep over phi at fixed (variant, r, ell,
/// noise). phi_max unset means one full period [0, pi/(2*ell)].
struct SweepSpec {
  Variant variant = Variant::ideal;
  double r = 1.0;
  int ell = 1;
  double phi_min = 0.0;
  std::optional<double> phi_max;
  int phi_steps = 50;
  NoiseConfig noise{};
  int jobs = 1;

  std::vector<double> phi_grid() const;  // validates and builds the grid
};

struct SignalRow {
  double phi;
  double signal;
};

struct SensitivityRow {
  double phi;
  double delta_phi;
  double signal;
};

/// Per-squeezing optimum sweep for the optimal-sensitivity curves.
struct OptimalSweepSpec {
  Variant variant = Variant::ideal;
  int ell = 1;
  double r_min = 0.5;
  double r_max = 1.5;
  int r_steps = 101;
  NoiseConfig noise{};
  int jobs = 1;
};

struct OptimalRow {
  double r;
  double nbar;
  double phi_opt;
  double delta_phi_min;
  double hl;
  double snl;
};

std::vector<SignalRow> run_signal_sweep(const SweepSpec& spec);
std::vector<SensitivityRow> run_sensitivity_sweep(const SweepSpec& spec);
std::vector<OptimalRow> run_optimal_sweep(const OptimalSweepSpec& spec);

}  // namespace oam
