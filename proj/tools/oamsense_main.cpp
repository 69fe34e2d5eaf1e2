#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oamsense/commands.hpp"
#include "oamsense/interferometer.hpp"
#include "oamsense/sensitivity.hpp"

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct ScenarioFlags {
  std::optional<double> r;
  std::optional<double> nbar;
  int ell = 1;

  double squeezing() const {
    if (nbar) {
      return oam::squeezing_from_mean_photons(*nbar);
    }
    return r.value_or(1.0);
  }
};

void add_scenario_flags(CLI::App* cmd, ScenarioFlags& flags) {
  auto* r = cmd->add_option("--r", flags.r, "Squeezing factor r (default 1)");
  auto* nbar =
      cmd->add_option("--nbar", flags.nbar, "Mean photon number N = 2 sinh^2 r");
  r->excludes(nbar);
  nbar->excludes(r);
  cmd->add_option("--ell", flags.ell, "OAM quantum number (>= 1)")
      ->check(CLI::PositiveNumber);
}

void add_noise_flags(CLI::App* cmd, oam::NoiseConfig& values) {
  cmd->add_option("--loss", values.loss, "Photon loss L in [0,1]");
  cmd->add_option("--dark", values.dark_rate,
                  "Dark-count rate per sampling gate");
  cmd->add_option("--nth", values.n_thermal, "Mean thermal occupation");
  cmd->add_option("--transmissivity", values.transmissivity,
                  "Virtual-BS transmissivity T in [0,1]");
}

// Exactly the noise flags relevant to the variant are accepted.
void check_noise_flags(const std::string& variant, const CLI::App& cmd) {
  const auto reject = [&](const char* name) {
    if (cmd.count(name) > 0) {
      throw CLI::ValidationError(std::string(name) +
                                 " is not accepted for variant '" + variant +
                                 "'");
    }
  };
  if (variant != "loss") {
    reject("--loss");
  }
  if (variant != "dark") {
    reject("--dark");
  }
  if (variant != "thermal") {
    reject("--nth");
    reject("--transmissivity");
  }
}

int run_with_output(const std::string& out_path,
                    const std::function<int(std::ostream&)>& fn) {
  if (out_path.empty()) {
    return fn(std::cout);
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file " << out_path << '\n';
    return 1;
  }
  return fn(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OAM-enhanced angular-displacement estimation simulator"};
  app.require_subcommand(1);

  std::string variant_name = "ideal";
  ScenarioFlags scenario;
  oam::NoiseConfig noise_values;
  double phi_min = 0.0;
  std::optional<double> phi_max;
  int phi_steps = 50;
  double r_min = 0.5;
  double r_max = 1.5;
  int r_steps = 101;
  int jobs = 1;
  bool degrees = false;
  std::string out_path;
  std::string figure_id;
  std::string figure_dir = ".";
  std::vector<std::string> tolerance_overrides;

  const auto add_common = [&](CLI::App* cmd, bool with_phi) {
    cmd->add_option("--variant", variant_name,
                    "Signal variant: ideal|loss|dark|thermal")
        ->check(CLI::IsMember({"ideal", "loss", "dark", "thermal"}));
    add_noise_flags(cmd, noise_values);
    if (with_phi) {
      add_scenario_flags(cmd, scenario);
      cmd->add_option("--phi-min", phi_min, "Grid start (default 0)");
      cmd->add_option("--phi-max", phi_max,
                      "Grid end (default one period pi/(2 ell))");
      cmd->add_option("--phi-steps", phi_steps, "Grid points (>= 2)");
      cmd->add_flag("--degrees", degrees,
                    "Interpret --phi-min/--phi-max in degrees");
    }
    cmd->add_option("--out", out_path, "Output CSV path (default stdout)");
    cmd->add_option("--jobs", jobs, "Concurrent grid evaluations")
        ->check(CLI::PositiveNumber);
  };

  auto* signal = app.add_subcommand("signal", "Parity signal over a phi grid");
  add_common(signal, true);
  auto* sensitivity =
      app.add_subcommand("sensitivity", "Sensitivity over a phi grid");
  add_common(sensitivity, true);

  auto* optimal = app.add_subcommand(
      "optimal", "Optimal sensitivity and reference limits over a squeezing range");
  add_common(optimal, false);
  optimal->add_option("--ell", scenario.ell, "OAM quantum number (>= 1)")
      ->check(CLI::PositiveNumber);
  optimal->add_option("--r-min", r_min, "Squeezing range start (default 0.5)");
  optimal->add_option("--r-max", r_max, "Squeezing range end (default 1.5)");
  optimal->add_option("--r-steps", r_steps, "Squeezing grid points (>= 2)");

  auto* figure =
      app.add_subcommand("figure", "Write the data files for one figure");
  figure->add_option("id", figure_id, "Figure id: 2a 2b 3a 3b 4a 4b 5")
      ->required();
  figure->add_option("--out", figure_dir, "Output directory (default .)");
  figure->add_option("--jobs", jobs, "Concurrent grid evaluations")
      ->check(CLI::PositiveNumber);

  auto* validate =
      app.add_subcommand("validate", "Run the self-validation cross-checks");
  validate->add_option("--tolerance", tolerance_overrides,
                       "Override a check tolerance as name=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (signal->parsed() || sensitivity->parsed()) {
      check_noise_flags(variant_name,
                        signal->parsed() ? *signal : *sensitivity);
      oam::SweepSpec spec;
      spec.variant = *oam::parse_variant(variant_name);
      spec.r = scenario.squeezing();
      spec.ell = scenario.ell;
      spec.phi_min = degrees ? phi_min * kDegToRad : phi_min;
      if (phi_max) {
        spec.phi_max = degrees ? *phi_max * kDegToRad : *phi_max;
      }
      spec.phi_steps = phi_steps;
      spec.noise = noise_values;
      spec.jobs = jobs;
      return run_with_output(out_path, [&](std::ostream& out) {
        return signal->parsed() ? oam::cmd_signal(spec, out, std::cerr)
                                : oam::cmd_sensitivity(spec, out, std::cerr);
      });
    }
    if (optimal->parsed()) {
      check_noise_flags(variant_name, *optimal);
      oam::OptimalSweepSpec spec;
      spec.variant = *oam::parse_variant(variant_name);
      spec.ell = scenario.ell;
      spec.r_min = r_min;
      spec.r_max = r_max;
      spec.r_steps = r_steps;
      spec.noise = noise_values;
      spec.jobs = jobs;
      return run_with_output(out_path, [&](std::ostream& out) {
        return oam::cmd_optimal(spec, out, std::cerr);
      });
    }
    if (figure->parsed()) {
      return oam::cmd_figure(figure_id, figure_dir, jobs, std::cerr);
    }
    if (validate->parsed()) {
      return oam::cmd_validate(tolerance_overrides, std::cout, std::cerr);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
