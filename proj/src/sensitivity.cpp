#include "oamsense/sensitivity.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace oam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDerivZeroTol = 1e-12;

// theta-dependence of every closed-form case: the detected-mode block
// determinant is att^2 + excess with
//   excess = var_coef * C * cos^2(theta) + const_term,   C = N(N+2),
// the signal is att/sqrt(det), and |d<Pi>/dphi| * det^(3/2) =
// att * ell * var_coef * C * |sin(2 theta)|. Keeping the excess explicit
// avoids the cancellation in 1 - att^2/det near the lossless optimum.
struct ClosedTerms {
  double big_c;       // N(N+2)
  double var_coef;    // coefficient of C cos^2(theta)
  double const_term;  // theta-independent excess
  double att;         // signal attenuation (1 except for dark counts)
};

ClosedTerms closed_terms(Variant variant, double r,
                         const NoiseConfig& noise) {
  const double s = std::sinh(r);
  const double nb = 2.0 * s * s;
  ClosedTerms t{nb * (nb + 2.0), 1.0, 0.0, 1.0};
  switch (variant) {
    case Variant::ideal:
      break;
    case Variant::loss: {
      const double q = 1.0 - noise.loss;
      t.var_coef = q * q;
      t.const_term = 2.0 * nb * noise.loss * q;
      break;
    }
    case Variant::dark:
      t.att = std::exp(-2.0 * noise.dark_rate);
      t.const_term = -std::expm1(-4.0 * noise.dark_rate);
      break;
    case Variant::thermal: {
      const double tt = noise.transmissivity;
      const double u = 1.0 - tt;
      const double nt = noise.n_thermal;
      t.var_coef = tt * tt;
      t.const_term = 2.0 * tt * tt - 2.0 * tt +
                     4.0 * (nt * nt + nt) * u * u +
                     2.0 * tt * (2.0 * nt + 1.0) * u * (nb + 1.0);
      break;
    }
  }
  return t;
}

// Sensitivity as a function of theta = 2*ell*phi; the full result is
// F(theta)/ell, which keeps the 1/ell scaling exact.
double sensitivity_theta(const ClosedTerms& t, double theta) {
  const double osc = t.var_coef * t.big_c;
  if (!(osc > 0.0)) {
    return kInf;  // signal independent of phi
  }
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double excess = osc * ct * ct + t.const_term;
  const double det = t.att * t.att + excess;
  const double slope_scale = std::abs(st * ct);
  if (slope_scale <= kDerivZeroTol && excess > kDerivZeroTol) {
    return kInf;  // derivative-zero point with nonvanishing noise amplitude
  }
  if (ct == 0.0) {
    // removable 0/0 at the lossless optimum; limit of the quotient below
    return det / (t.att * 2.0 * std::sqrt(osc) * std::abs(st));
  }
  return std::sqrt(excess) * det / (t.att * 2.0 * osc * slope_scale);
}

void check_noise(const NoiseConfig& noise) {
  // NoiseConfig fields are publicly assignable; route them through the
  // range-checking constructor before use.
  NoiseConfig checked(noise.loss, noise.dark_rate, noise.n_thermal,
                      noise.transmissivity);
  (void)checked;
}

}  // namespace

const char* variant_name(Variant variant) {
  switch (variant) {
    case Variant::ideal:
      return "ideal";
    case Variant::loss:
      return "loss";
    case Variant::dark:
      return "dark";
    case Variant::thermal:
      return "thermal";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "ideal") return Variant::ideal;
  if (name == "loss") return Variant::loss;
  if (name == "dark") return Variant::dark;
  if (name == "thermal") return Variant::thermal;
  return std::nullopt;
}

double signal_value(Variant variant, const Scenario& scenario,
                    const NoiseConfig& noise) {
  switch (variant) {
    case Variant::ideal:
      return signal_ideal(scenario);
    case Variant::loss:
      return signal_loss(scenario, noise.loss);
    case Variant::dark:
      return signal_dark(scenario, noise.dark_rate);
    case Variant::thermal:
      return signal_thermal(scenario, noise.n_thermal, noise.transmissivity);
  }
  throw std::invalid_argument("unknown variant");
}

SensitivityPoint sensitivity_closed(Variant variant, const Scenario& scenario,
                                    const NoiseConfig& noise) {
  check_noise(noise);
  const ClosedTerms t = closed_terms(variant, scenario.r, noise);
  const double f = sensitivity_theta(t, 2.0 * scenario.ell * scenario.phi);
  return {scenario.phi, f / scenario.ell,
          signal_value(variant, scenario, noise)};
}

SensitivityPoint sensitivity_numeric(
    const std::function<double(double)>& signal_fn, double phi, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("step must be positive and finite");
  }
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("phi must be finite");
  }
  const double s = signal_fn(phi);
  // Central differences at h and h/2, Richardson-combined to fourth order.
  const double d1 = (signal_fn(phi + step) - signal_fn(phi - step)) / (2.0 * step);
  const double d2 = (signal_fn(phi + step / 2.0) - signal_fn(phi - step / 2.0)) / step;
  const double deriv = (4.0 * d2 - d1) / 3.0;
  const double noise_amp = std::sqrt(std::max(0.0, 1.0 - s * s));
  if (std::abs(deriv) < 1e-14) {
    return {phi, kInf, s};
  }
  return {phi, noise_amp / std::abs(deriv), s};
}

SensitivityPoint sensitivity_numeric(Variant variant, const Scenario& scenario,
                                     const NoiseConfig& noise) {
  check_noise(noise);
  const double step = 1e-4 * std::numbers::pi / (2.0 * scenario.ell);
  const int ell = scenario.ell;
  const double r = scenario.r;
  return sensitivity_numeric(
      [&](double phi) {
        return signal_value(variant, Scenario(r, ell, phi), noise);
      },
      scenario.phi, step);
}

Optimum optimal_sensitivity(Variant variant, double r, int ell,
                            const NoiseConfig& noise) {
  check_noise(noise);
  if (ell < 1) {
    throw std::invalid_argument("OAM quantum number must be >= 1");
  }
  const ClosedTerms t = closed_terms(variant, r, noise);
  const auto f = [&t](double theta) { return sensitivity_theta(t, theta); };

  // Coarse interior scan over theta in (0, pi), then golden-section
  // refinement of the bracketing interval.
  constexpr int kCoarse = 2001;
  constexpr double kPi = std::numbers::pi;
  int best = 1;
  double best_val = kInf;
  for (int i = 1; i < kCoarse; ++i) {
    const double v = f(kPi * i / kCoarse);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo = kPi * (best - 1) / kCoarse;
  double hi = kPi * (best + 1) / kCoarse;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  const double theta_opt = (lo + hi) / 2.0;
  const double val = std::min(f(theta_opt), std::min(f1, f2));
  return {theta_opt / (2.0 * ell), val / ell};
}

LimitSet limits(const Scenario& scenario) {
  const double nb = scenario.mean_photon_number();
  const double ell = scenario.ell;
  if (!(nb > 0.0)) {
    return {kInf, kInf, kInf};
  }
  return {1.0 / (2.0 * ell * nb), 1.0 / (2.0 * ell * std::sqrt(nb)),
          1.0 / (2.0 * ell * std::sqrt(nb * (nb + 2.0)))};
}

double hl_gap(Variant variant, const Scenario& scenario,
              const NoiseConfig& noise) {
  const Optimum opt =
      optimal_sensitivity(variant, scenario.r, scenario.ell, noise);
  return opt.delta_phi_min - limits(scenario).heisenberg;
}

}  // namespace oam
