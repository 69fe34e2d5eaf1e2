#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "oamsense/sweep.hpp"

namespace oam {

// Command entry points shared by the CLI binary and the tests. Each returns
// the process exit code: 0 success, 1 usage/parameter error, 2 validation
// failure. Parameter errors are reported on `err`.

int cmd_signal(const SweepSpec& spec, std::ostream& out, std::ostream& err);
int cmd_sensitivity(const SweepSpec& spec, std::ostream& out,
                    std::ostream& err);
int cmd_optimal(const OptimalSweepSpec& spec, std::ostream& out,
                std::ostream& err);
int cmd_figure(const std::string& id, const std::string& out_dir, int jobs,
               std::ostream& err);

/// Runs the validation suite, printing one line per check with the measured
/// deviation and its tolerance. Overrides are "name=value" strings.
int cmd_validate(const std::vector<std::string>& tolerance_overrides,
                 std::ostream& out, std::ostream& err);

}  // namespace oam
