#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oam {

/// Reproducible figure-data sets; each id maps to one fixed parameter set
/// (see the emitted manifest for the values).
enum class FigureId { fig2a, fig2b, fig3a, fig3b, fig4a, fig4b, fig5 };

std::optional<FigureId> parse_figure_id(std::string_view id);
std::string figure_name(FigureId id);  // "2a", "2b", ...

struct FigureOutput {
  std::vector<std::string> curve_files;
  std::string manifest_file;
};

/// Writes one CSV per curve plus a JSON manifest (curve files, parameters,
/// axis notes) into out_dir. Returns the written paths.
FigureOutput emit_figure(FigureId id, const std::string& out_dir,
                         int jobs = 1);

}  // namespace oam
