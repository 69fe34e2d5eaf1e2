#include "oamsense/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <map>
#include <string>

#include "oamsense/csv.hpp"
#include "oamsense/figures.hpp"
#include "oamsense/validate.hpp"

namespace oam {

namespace {

std::map<std::string, double> parse_overrides(
    const std::vector<std::string>& overrides) {
  std::map<std::string, double> parsed;
  for (const std::string& s : overrides) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size()) {
      throw std::invalid_argument("tolerance override must be name=value: " + s);
    }
    std::size_t used = 0;
    const double value = std::stod(s.substr(eq + 1), &used);
    if (used != s.size() - eq - 1) {
      throw std::invalid_argument("bad tolerance value in: " + s);
    }
    parsed[s.substr(0, eq)] = value;
  }
  return parsed;
}

}  // namespace

int cmd_signal(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const auto rows = run_signal_sweep(spec);
    out << "phi,signal\n";
    for (const auto& row : rows) {
      csv::write_row(out, {row.phi, row.signal});
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_sensitivity(const SweepSpec& spec, std::ostream& out,
                    std::ostream& err) {
  try {
    const auto rows = run_sensitivity_sweep(spec);
    out << "phi,delta_phi,signal\n";
    for (const auto& row : rows) {
      csv::write_row(out, {row.phi, row.delta_phi, row.signal});
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_optimal(const OptimalSweepSpec& spec, std::ostream& out,
                std::ostream& err) {
  try {
    const auto rows = run_optimal_sweep(spec);
    out << "r,N,phi_opt,delta_phi_min,hl,snl\n";
    for (const auto& row : rows) {
      csv::write_row(out, {row.r, row.nbar, row.phi_opt, row.delta_phi_min,
                           row.hl, row.snl});
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_figure(const std::string& id, const std::string& out_dir, int jobs,
               std::ostream& err) {
  const auto figure = parse_figure_id(id);
  if (!figure) {
    err << "error: unknown figure id '" << id
        << "' (expected one of 2a 2b 3a 3b 4a 4b 5)\n";
    return 1;
  }
  try {
    emit_figure(*figure, out_dir, jobs);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_validate(const std::vector<std::string>& tolerance_overrides,
                 std::ostream& out, std::ostream& err) {
  ValidationReport report;
  try {
    report = run_validation(parse_overrides(tolerance_overrides));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  for (const auto& c : report.checks) {
    char line[160];
    std::snprintf(line, sizeof line, "[%s] %-26s deviation=%-12.4g tolerance=%-10.3g (%.2fs)",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.deviation,
                  c.tolerance, c.seconds);
    out << line << '\n';
  }
  const std::size_t failed =
      report.checks.size() -
      static_cast<std::size_t>(std::count_if(
          report.checks.begin(), report.checks.end(),
          [](const CheckResult& c) { return c.pass; }));
  out << (report.all_pass() ? "all checks passed"
                            : std::to_string(failed) + " check(s) failed")
      << " in " << csv::field(report.total_seconds()) << " s\n";
  return report.all_pass() ? 0 : 2;
}

}  // namespace oam
