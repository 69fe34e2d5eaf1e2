#include "oamsense/figures.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "oamsense/csv.hpp"
#include "oamsense/sweep.hpp"

namespace oam {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kPhiPoints = 201;
constexpr int kRPoints = 101;
constexpr const char* kPhiAxisNote =
    "phi axis spans one full period [0, pi/(2 ell)], centered on the optimum "
    "pi/(4 ell)";

struct PhiCurve {
  Variant variant;
  double r;
  int ell;
  NoiseConfig noise;
};

struct OptimalCurve {
  Variant variant;
  int ell;
  NoiseConfig noise;
};

NoiseConfig loss_noise(double loss) {
  NoiseConfig n;
  n.loss = loss;
  return n;
}

NoiseConfig dark_noise(double rate) {
  NoiseConfig n;
  n.dark_rate = rate;
  return n;
}

NoiseConfig thermal_noise(double n_th, double t) {
  NoiseConfig n;
  n.n_thermal = n_th;
  n.transmissivity = t;
  return n;
}

json noise_json(Variant variant, const NoiseConfig& n) {
  json j;
  switch (variant) {
    case Variant::ideal:
      break;
    case Variant::loss:
      j["loss"] = n.loss;
      break;
    case Variant::dark:
      j["dark_rate"] = n.dark_rate;
      break;
    case Variant::thermal:
      j["n_thermal"] = n.n_thermal;
      j["transmissivity"] = n.transmissivity;
      break;
  }
  return j;
}

std::string write_phi_curve(const fs::path& dir, const std::string& stem,
                            const PhiCurve& c, int jobs, json& manifest) {
  SweepSpec spec;
  spec.variant = c.variant;
  spec.r = c.r;
  spec.ell = c.ell;
  spec.phi_steps = kPhiPoints;
  spec.noise = c.noise;
  spec.jobs = jobs;
  const auto rows = run_sensitivity_sweep(spec);
  const std::string file = stem + ".csv";
  std::ofstream out(dir / file);
  out << "phi,delta_phi,signal\n";
  for (const auto& row : rows) {
    csv::write_row(out, {row.phi, row.delta_phi, row.signal});
  }
  json entry;
  entry["file"] = file;
  entry["kind"] = "sensitivity_vs_phi";
  entry["variant"] = variant_name(c.variant);
  entry["r"] = c.r;
  entry["ell"] = c.ell;
  entry["phi_steps"] = kPhiPoints;
  entry["noise"] = noise_json(c.variant, c.noise);
  manifest["curves"].push_back(entry);
  return file;
}

std::string write_optimal_curve(const fs::path& dir, const std::string& stem,
                                const OptimalCurve& c, int jobs,
                                json& manifest) {
  OptimalSweepSpec spec;
  spec.variant = c.variant;
  spec.ell = c.ell;
  spec.r_steps = kRPoints;
  spec.noise = c.noise;
  spec.jobs = jobs;
  const auto rows = run_optimal_sweep(spec);
  const std::string file = stem + ".csv";
  std::ofstream out(dir / file);
  out << "r,N,phi_opt,delta_phi_min,hl,snl\n";
  for (const auto& row : rows) {
    csv::write_row(out, {row.r, row.nbar, row.phi_opt, row.delta_phi_min,
                         row.hl, row.snl});
  }
  json entry;
  entry["file"] = file;
  entry["kind"] = "optimal_vs_r";
  entry["variant"] = variant_name(c.variant);
  entry["ell"] = c.ell;
  entry["r_min"] = spec.r_min;
  entry["r_max"] = spec.r_max;
  entry["r_steps"] = kRPoints;
  entry["noise"] = noise_json(c.variant, c.noise);
  manifest["curves"].push_back(entry);
  return file;
}

}  // namespace

std::optional<FigureId> parse_figure_id(std::string_view id) {
  if (id == "2a") return FigureId::fig2a;
  if (id == "2b") return FigureId::fig2b;
  if (id == "3a") return FigureId::fig3a;
  if (id == "3b") return FigureId::fig3b;
  if (id == "4a") return FigureId::fig4a;
  if (id == "4b") return FigureId::fig4b;
  if (id == "5") return FigureId::fig5;
  return std::nullopt;
}

std::string figure_name(FigureId id) {
  switch (id) {
    case FigureId::fig2a: return "2a";
    case FigureId::fig2b: return "2b";
    case FigureId::fig3a: return "3a";
    case FigureId::fig3b: return "3b";
    case FigureId::fig4a: return "4a";
    case FigureId::fig4b: return "4b";
    case FigureId::fig5: return "5";
  }
  return "?";
}

FigureOutput emit_figure(FigureId id, const std::string& out_dir, int jobs) {
  const fs::path dir(out_dir.empty() ? "." : out_dir);
  fs::create_directories(dir);

  json manifest;
  manifest["figure"] = figure_name(id);
  manifest["curves"] = json::array();

  FigureOutput result;
  const std::string prefix = "fig" + figure_name(id) + "_";

  switch (id) {
    case FigureId::fig2a:
      manifest["phi_axis_note"] = kPhiAxisNote;
      for (double loss : {0.0, 0.01, 0.03}) {
        result.curve_files.push_back(write_phi_curve(
            dir, prefix + "loss" + csv::field(loss),
            {Variant::loss, 1.0, 1, loss_noise(loss)}, jobs, manifest));
      }
      break;
    case FigureId::fig2b:
      for (double loss : {0.01, 0.03}) {
        result.curve_files.push_back(write_optimal_curve(
            dir, prefix + "loss" + csv::field(loss),
            {Variant::loss, 1, loss_noise(loss)}, jobs, manifest));
      }
      break;
    case FigureId::fig3a:
      manifest["phi_axis_note"] = kPhiAxisNote;
      for (double rate : {0.01, 0.1}) {
        result.curve_files.push_back(write_phi_curve(
            dir, prefix + "dark" + csv::field(rate),
            {Variant::dark, 1.0, 1, dark_noise(rate)}, jobs, manifest));
      }
      break;
    case FigureId::fig3b:
      for (double rate : {0.01, 0.1}) {
        result.curve_files.push_back(write_optimal_curve(
            dir, prefix + "dark" + csv::field(rate),
            {Variant::dark, 1, dark_noise(rate)}, jobs, manifest));
      }
      break;
    case FigureId::fig4a:
      manifest["phi_axis_note"] = kPhiAxisNote;
      for (double t : {0.99, 0.97}) {
        result.curve_files.push_back(write_phi_curve(
            dir, prefix + "T" + csv::field(t),
            {Variant::thermal, 1.0, 1, thermal_noise(0.1, t)}, jobs,
            manifest));
      }
      break;
    case FigureId::fig4b:
      for (double t : {0.99, 0.97}) {
        result.curve_files.push_back(write_optimal_curve(
            dir, prefix + "T" + csv::field(t),
            {Variant::thermal, 1, thermal_noise(0.1, t)}, jobs,
            manifest));
      }
      break;
    case FigureId::fig5:
      for (int ell : {1, 2}) {
        result.curve_files.push_back(write_optimal_curve(
            dir, prefix + "ell" + std::to_string(ell),
            {Variant::loss, ell, loss_noise(0.01)}, jobs, manifest));
      }
      break;
  }

  const std::string manifest_name = prefix + "manifest.json";
  std::ofstream mf(dir / manifest_name);
  mf << manifest.dump(2) << '\n';
  result.manifest_file = manifest_name;
  return result;
}

}  // namespace oam
