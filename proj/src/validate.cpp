#include "oamsense/validate.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "oamsense/fock.hpp"
#include "oamsense/sensitivity.hpp"
#include "oamsense/sweep.hpp"

namespace oam {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> kRGrid = {0.1, 0.5, 1.0, 1.5};
const std::vector<int> kEllGrid = {1, 2, 5, 10};
constexpr int kPhiPoints = 50;

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<double> phi_grid(int ell, int points = kPhiPoints) {
  return linspace(0.0, kPi / (2.0 * ell), points);
}

double matrix_vs_closed_loss() {
  double worst = 0.0;
  for (double r : kRGrid) {
    for (int ell : kEllGrid) {
      for (double loss : {0.01, 0.2}) {
        for (double phi : phi_grid(ell)) {
          const Scenario sc(r, ell, phi);
          const GaussianState lossy =
              apply_uniform_loss(ideal_pipeline(sc), loss);
          worst = std::max(worst, std::abs(parity_expectation(lossy, 1) -
                                           signal_loss(sc, loss)));
        }
      }
    }
  }
  return worst;
}

double matrix_vs_closed_thermal() {
  double worst = 0.0;
  for (double r : kRGrid) {
    for (int ell : kEllGrid) {
      for (auto [nth, t] : {std::pair{0.1, 0.99}, std::pair{0.5, 0.9}}) {
        for (double phi : phi_grid(ell)) {
          const Scenario sc(r, ell, phi);
          const GaussianState out = thermal_pipeline(sc, nth, t);
          worst = std::max(worst, std::abs(parity_expectation(out, 1) -
                                           signal_thermal(sc, nth, t)));
        }
      }
    }
  }
  return worst;
}

double reduction_identities() {
  double worst = 0.0;
  for (double r : kRGrid) {
    for (int ell : kEllGrid) {
      for (double phi : phi_grid(ell)) {
        const Scenario sc(r, ell, phi);
        worst = std::max(worst, std::abs(det_loss(sc, 0.0) - det_ideal(sc)));
        worst = std::max(worst,
                         std::abs(det_slope_loss(sc, 0.0) - det_slope_ideal(sc)));
        worst = std::max(worst,
                         std::abs(det_thermal(sc, 0.0, 1.0) - det_ideal(sc)));
        worst = std::max(worst, std::abs(det_slope_thermal(sc, 0.0, 1.0) -
                                         det_slope_ideal(sc)));
      }
    }
  }
  return worst;
}

struct OptimumDeviations {
  double phi_dev;
  double value_rel_dev;
};

OptimumDeviations ideal_optimum_deviation() {
  OptimumDeviations d{0.0, 0.0};
  for (double r : kRGrid) {
    for (int ell : kEllGrid) {
      const Optimum opt = optimal_sensitivity(Variant::ideal, r, ell);
      const double nb = Scenario(r, ell, 0.0).mean_photon_number();
      const double expected = 1.0 / (2.0 * ell * std::sqrt(nb * (nb + 2.0)));
      d.phi_dev =
          std::max(d.phi_dev, std::abs(opt.phi_opt - kPi / (4.0 * ell)));
      d.value_rel_dev =
          std::max(d.value_rel_dev,
                   std::abs(opt.delta_phi_min - expected) / expected);
    }
  }
  return d;
}

double ell_scaling_deviation() {
  NoiseConfig noise;
  noise.loss = 0.01;
  double worst = 0.0;
  for (double r : linspace(0.5, 1.5, 11)) {
    const double d1 =
        optimal_sensitivity(Variant::loss, r, 1, noise).delta_phi_min;
    const double d2 =
        optimal_sensitivity(Variant::loss, r, 2, noise).delta_phi_min;
    const double d10 =
        optimal_sensitivity(Variant::loss, r, 10, noise).delta_phi_min;
    worst = std::max(worst, std::abs(d2 / d1 - 0.5));
    worst = std::max(worst, std::abs(d10 - d1 / 10.0) / (d1 / 10.0));
  }
  return worst;
}

double visibility_closed_deviation() {
  double worst = 0.0;
  for (double r : {0.5, 1.0, 1.5}) {
    double lo = 2.0;
    double hi = -1.0;
    for (double phi : phi_grid(1, 101)) {
      const double s = signal_ideal(Scenario(r, 1, phi));
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    const double swept = (hi - lo) / (hi + lo);
    worst = std::max(worst, std::abs(swept - visibility(Scenario(r, 1, 0.0))));
  }
  return worst;
}

double visibility_oracle_deviation() {
  constexpr int kCutoff = 80;
  // half period [0, pi/4]: the signal is monotone across it, so both
  // extrema sit exactly on the endpoint grid points
  const auto phis = linspace(0.0, kPi / 4.0, kPhiPoints);
  const auto vals = oracle_sweep(1.0, 1, phis, kCutoff, worker_count());
  double lo = 2.0;
  double hi = -1.0;
  for (double v : vals) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double swept = (hi - lo) / (hi + lo);
  return std::abs(swept - visibility(Scenario(1.0, 1, 0.0)));
}

double dark_ratio_deviation() {
  double worst = 0.0;
  for (double rate : {0.01, 0.1}) {
    const double expected = std::exp(-2.0 * rate);
    for (double r : kRGrid) {
      for (int ell : kEllGrid) {
        for (double phi : phi_grid(ell)) {
          const Scenario sc(r, ell, phi);
          const double ratio = signal_dark(sc, rate) / signal_ideal(sc);
          worst = std::max(worst, std::abs(ratio - expected));
        }
      }
    }
  }
  return worst;
}

double dark_optimal_deviation() {
  NoiseConfig noise;
  noise.dark_rate = 0.01;
  const double ideal =
      optimal_sensitivity(Variant::ideal, 1.0, 1).delta_phi_min;
  const double dark =
      optimal_sensitivity(Variant::dark, 1.0, 1, noise).delta_phi_min;
  return std::abs(dark - ideal) / ideal;
}

double monotonicity_deviation() {
  double worst = 0.0;
  const auto scan = [&](Variant variant,
                        const std::vector<NoiseConfig>& configs) {
    double prev = 0.0;
    bool first = true;
    for (const NoiseConfig& n : configs) {
      const double v =
          optimal_sensitivity(variant, 1.0, 1, n).delta_phi_min;
      if (!first) {
        worst = std::max(worst, prev - v);  // positive means a decrease
      }
      prev = v;
      first = false;
    }
  };
  std::vector<NoiseConfig> losses;
  for (double l : {0.0, 0.005, 0.01, 0.02, 0.05, 0.1}) {
    NoiseConfig n;
    n.loss = l;
    losses.push_back(n);
  }
  std::vector<NoiseConfig> darks;
  for (double d : {0.0, 0.005, 0.01, 0.05, 0.1}) {
    NoiseConfig n;
    n.dark_rate = d;
    darks.push_back(n);
  }
  std::vector<NoiseConfig> thermals;
  for (double nth : {0.0, 0.05, 0.1, 0.5, 1.0}) {
    NoiseConfig n;
    n.n_thermal = nth;
    n.transmissivity = 0.99;
    thermals.push_back(n);
  }
  scan(Variant::loss, losses);
  scan(Variant::dark, darks);
  scan(Variant::thermal, thermals);
  return std::max(worst, 0.0);
}

double ordering_deviation() {
  // Thermal coupling at matched loss must never beat the loss channel:
  // det_thermal(n=0, T=1-L) >= det_loss(L), i.e. a smaller thermal det would
  // mean a larger signal. Positive deviation = violation.
  double worst = 0.0;
  for (double r : kRGrid) {
    for (int ell : kEllGrid) {
      for (double loss : {0.01, 0.2, 0.6}) {
        for (double phi : phi_grid(ell)) {
          const Scenario sc(r, ell, phi);
          worst = std::max(worst, det_loss(sc, loss) -
                                      det_thermal(sc, 0.0, 1.0 - loss));
        }
      }
    }
  }
  return std::max(worst, 0.0);
}

double numeric_vs_closed_deviation() {
  double worst = 0.0;
  NoiseConfig loss;
  loss.loss = 0.01;
  NoiseConfig dark;
  dark.dark_rate = 0.1;
  NoiseConfig thermal;
  thermal.n_thermal = 0.1;
  thermal.transmissivity = 0.97;
  const std::vector<std::pair<Variant, NoiseConfig>> cases = {
      {Variant::ideal, NoiseConfig{}},
      {Variant::loss, loss},
      {Variant::dark, dark},
      {Variant::thermal, thermal}};
  for (const auto& [variant, noise] : cases) {
    for (double r : {0.5, 1.0}) {
      for (int ell : {1, 5}) {
        for (double phi : phi_grid(ell)) {
          if (std::abs(std::sin(4.0 * ell * phi)) < 0.1) {
            continue;  // derivative-zero neighbourhood excluded
          }
          const Scenario sc(r, ell, phi);
          const double closed =
              sensitivity_closed(variant, sc, noise).delta_phi;
          const double numeric =
              sensitivity_numeric(variant, sc, noise).delta_phi;
          worst = std::max(worst, std::abs(numeric - closed) / closed);
        }
      }
    }
  }
  return worst;
}

}  // namespace

namespace checks {

double ideal_matrix_vs_closed(
    const std::function<GaussianState(const Scenario&)>& pipeline) {
  double worst = 0.0;
  for (double r : kRGrid) {
    for (int ell : kEllGrid) {
      for (double phi : phi_grid(ell)) {
        const Scenario sc(r, ell, phi);
        worst = std::max(worst, std::abs(parity_expectation(pipeline(sc), 1) -
                                         signal_ideal(sc)));
      }
    }
  }
  return worst;
}

double oracle_vs_closed(double r, int ell, int phi_points, int cutoff,
                        const std::function<double(const Scenario&)>& closed) {
  const auto phis = phi_grid(ell, phi_points);
  const auto vals = oracle_sweep(r, ell, phis, cutoff, worker_count());
  double worst = 0.0;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    worst = std::max(worst,
                     std::abs(vals[i] - closed(Scenario(r, ell, phis[i]))));
  }
  return worst;
}

}  // namespace checks

bool ValidationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) {
      return false;
    }
  }
  return true;
}

double ValidationReport::total_seconds() const {
  double total = 0.0;
  for (const auto& c : checks) {
    total += c.seconds;
  }
  return total;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) {
      return &c;
    }
  }
  return nullptr;
}

std::map<std::string, double> default_tolerances() {
  return {
      {"matrix_vs_closed_ideal", 1e-12},
      {"matrix_vs_closed_loss", 1e-12},
      {"matrix_vs_closed_thermal", 1e-12},
      {"oracle_vs_closed_low_r", 1e-8},
      {"oracle_vs_closed_r1", 1e-6},
      {"reduction_identities", 1e-12},
      {"ideal_optimum_phi", 1e-6},
      {"ideal_optimum_value", 1e-9},
      {"headline_hl", 2e-3},
      {"headline_loss_optimal", 1e-3},
      {"headline_hl_gap", 3e-4},
      {"ell_scaling", 1e-9},
      {"visibility_closed", 1e-9},
      {"visibility_oracle", 1e-6},
      {"dark_ratio", 1e-15},
      {"dark_optimal_vs_ideal", 5e-3},
      {"noise_monotonicity", 1e-12},
      {"thermal_vs_loss_ordering", 1e-12},
      {"numeric_vs_closed", 1e-8},
  };
}

ValidationReport run_validation(
    const std::map<std::string, double>& tolerance_overrides) {
  auto tolerances = default_tolerances();
  for (const auto& [name, value] : tolerance_overrides) {
    auto it = tolerances.find(name);
    if (it == tolerances.end()) {
      throw std::invalid_argument("unknown tolerance name: " + name);
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw std::invalid_argument("tolerance must be positive and finite");
    }
    it->second = value;
  }

  ValidationReport report;
  const auto add = [&](const std::string& name,
                       const std::function<double()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    const double deviation = fn();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const double tol = tolerances.at(name);
    report.checks.push_back(
        {name, deviation, tol, deviation <= tol, seconds});
  };

  add("matrix_vs_closed_ideal", [] {
    return checks::ideal_matrix_vs_closed(
        [](const Scenario& sc) { return ideal_pipeline(sc); });
  });
  add("matrix_vs_closed_loss", matrix_vs_closed_loss);
  add("matrix_vs_closed_thermal", matrix_vs_closed_thermal);
  add("oracle_vs_closed_low_r", [] {
    double worst = 0.0;
    for (double r : {0.2, 0.5, 0.8}) {
      for (int ell : {1, 3}) {
        worst = std::max(
            worst, checks::oracle_vs_closed(r, ell, kPhiPoints,
                                            default_cutoff(r), signal_ideal));
      }
    }
    return worst;
  });
  add("oracle_vs_closed_r1", [] {
    double worst = 0.0;
    for (int ell : {1, 3}) {
      worst = std::max(worst,
                       checks::oracle_vs_closed(1.0, ell, kPhiPoints,
                                                default_cutoff(1.0),
                                                signal_ideal));
    }
    return worst;
  });
  add("reduction_identities", reduction_identities);

  const OptimumDeviations opt_dev = ideal_optimum_deviation();
  add("ideal_optimum_phi", [&] { return opt_dev.phi_dev; });
  add("ideal_optimum_value", [&] { return opt_dev.value_rel_dev; });

  NoiseConfig headline_noise;
  headline_noise.loss = 0.01;
  const double hl = limits(Scenario(1.0, 1, 0.0)).heisenberg;
  const double loss_opt =
      optimal_sensitivity(Variant::loss, 1.0, 1, headline_noise).delta_phi_min;
  add("headline_hl", [&] { return std::abs(hl - 0.1809); });
  add("headline_loss_optimal", [&] { return std::abs(loss_opt - 0.1968); });
  add("headline_hl_gap", [&] { return std::abs((loss_opt - hl) - 1.59e-2); });

  add("ell_scaling", ell_scaling_deviation);
  add("visibility_closed", visibility_closed_deviation);
  add("visibility_oracle", visibility_oracle_deviation);
  add("dark_ratio", dark_ratio_deviation);
  add("dark_optimal_vs_ideal", dark_optimal_deviation);
  add("noise_monotonicity", monotonicity_deviation);
  add("thermal_vs_loss_ordering", ordering_deviation);
  add("numeric_vs_closed", numeric_vs_closed_deviation);

  return report;
}

}  // namespace oam
