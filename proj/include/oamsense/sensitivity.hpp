#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "oamsense/interferometer.hpp"

namespace oam {

enum class Variant { ideal, loss, dark, thermal };

const char* variant_name(Variant variant);
std::optional<Variant> parse_variant(std::string_view name);

/// Parity signal of the chosen noise case at the scenario's phi. Only the
/// noise fields relevant to the variant are read.
double signal_value(Variant variant, const Scenario& scenario,
                    const NoiseConfig& noise = {});

/// One evaluated working point. delta_phi is +infinity where the signal
/// derivative vanishes without the noise amplitude vanishing with it
/// (reported, never thrown).
struct SensitivityPoint {
  double phi;
  double delta_phi;
  double signal;
};

/// Reference lines at a given (r, ell). heisenberg = 1/(2*ell*N) and
/// shot_noise = 1/(2*ell*sqrt(N)) are the usual limits with the angular 2*ell
/// prefactor; min_sensitivity = 1/(2*ell*sqrt(N(N+2))) is the lossless
/// optimum. All three are +infinity at N = 0.
struct LimitSet {
  double heisenberg;
  double shot_noise;
  double min_sensitivity;
};

struct Optimum {
  double phi_opt;
  double delta_phi_min;
};

/// Error-propagation sensitivity sqrt(1 - <Pi>^2) / |d<Pi>/dphi| from the
/// closed-form signal of the chosen variant, evaluated in a
/// cancellation-free arrangement so the removable 0/0 at the lossless
/// optimum yields its finite limit.
SensitivityPoint sensitivity_closed(Variant variant, const Scenario& scenario,
                                    const NoiseConfig& noise = {});

/// Generic numeric engine: Richardson-refined central differences of
/// signal_fn around phi with the given step. Derivative magnitudes below
/// 1e-14 are reported as unbounded.
SensitivityPoint sensitivity_numeric(
    const std::function<double(double)>& signal_fn, double phi, double step);

/// Numeric engine applied to a variant's closed-form signal, with the
/// scale-aware default step 1e-4 * pi/(2*ell).
SensitivityPoint sensitivity_numeric(Variant variant, const Scenario& scenario,
                                     const NoiseConfig& noise = {});

/// Minimum sensitivity over one period phi in (0, pi/(2*ell)): coarse scan
/// (>= 1000 interior points) plus golden-section refinement. The search runs
/// in theta = 2*ell*phi, so the result scales exactly as 1/ell.
Optimum optimal_sensitivity(Variant variant, double r, int ell,
                            const NoiseConfig& noise = {});

LimitSet limits(const Scenario& scenario);

/// Signed distance of the variant's optimal sensitivity from the Heisenberg
/// line: optimal - 1/(2*ell*N). Positive means worse than the limit.
double hl_gap(Variant variant, const Scenario& scenario,
              const NoiseConfig& noise = {});

}  // namespace oam
