#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oamsense/gaussian.hpp"
#include "oamsense/interferometer.hpp"

namespace oam {

struct CheckResult {
  std::string name;
  double deviation;
  double tolerance;
  bool pass;
  double seconds;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  double total_seconds() const;
  const CheckResult* find(const std::string& name) const;
};

std::map<std::string, double> default_tolerances();

/// Runs the full cross-check suite (matrix vs closed forms, Fock oracle vs
/// closed form, reduction identities, optimum location, headline comparison
/// values, scaling/ordering/monotonicity properties, numeric-derivative
/// engine). Tolerances may be overridden by name; unknown names throw.
ValidationReport run_validation(
    const std::map<std::string, double>& tolerance_overrides = {});

namespace checks {

/// Max deviation between the matrix-route parity of `pipeline` and the ideal
/// closed form over the standard grid. The pipeline is pluggable so tests can
/// verify that a corrupted optical element is detected.
double ideal_matrix_vs_closed(
    const std::function<GaussianState(const Scenario&)>& pipeline);

/// Max deviation between the Fock oracle and `closed` over a phi grid.
double oracle_vs_closed(double r, int ell, int phi_points, int cutoff,
                        const std::function<double(const Scenario&)>& closed);

}  // namespace checks

}  // namespace oam
