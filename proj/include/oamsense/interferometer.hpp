#pragma once

#include "oamsense/gaussian.hpp"

namespace oam {

/// Physical configuration of one estimation run: squeezing factor r of the
/// two-mode squeezed vacuum input, OAM quantum number ell (>= 1), and the
/// angular displacement phi of the Dove prisms, in radians.
struct Scenario {
  Scenario(double r, int ell, double phi);

  double r;
  int ell;
  double phi;

  /// Mean photon number of the input state, N = 2 sinh^2 r.
  double mean_photon_number() const;
};

/// Inverse of N = 2 sinh^2 r.
double squeezing_from_mean_photons(double nbar);

/// Detector/channel imperfections; the defaults are the ideal values.
struct NoiseConfig {
  double loss = 0.0;            // uniform photon loss L in [0, 1]
  double dark_rate = 0.0;       // expected dark counts per sampling gate
  double n_thermal = 0.0;       // mean thermal occupation of the environment
  double transmissivity = 1.0;  // virtual-BS transmissivity T in [0, 1]

  NoiseConfig() = default;
  NoiseConfig(double loss, double dark_rate, double n_thermal,
              double transmissivity);
};

/// Two-mode squeezed vacuum: zero mean, covariance with cosh(2r) on the
/// diagonal blocks and sinh(2r)*diag(1,-1) on the off-diagonal blocks.
GaussianState tmsv_state(double r);

/// Single-mode thermal state: zero mean, covariance (2 n_th + 1) I.
GaussianState thermal_state(double n_thermal);

/// 50:50 beam splitter. total_modes = 2 gives the 4x4 quadrature matrix
/// (1/sqrt 2) [[I2, I2], [I2, -I2]]; total_modes = 4 embeds it as
/// diag(S_bs, I4) on a system+environment space.
SymplecticTransform bs_transform(int total_modes);

/// Rotation by 2*ell*phi on mode A's quadratures (the combined effect of the
/// spiral phase plates and Dove prisms), identity elsewhere. total_modes as
/// for bs_transform.
SymplecticTransform angular_displacement_transform(int ell, double phi,
                                                   int total_modes = 2);

/// Virtual beam splitters coupling each signal arm to its own environment
/// mode with a common transmissivity T: the 8x8 matrix
/// [[sqrt(T) I4, sqrt(1-T) I4], [sqrt(1-T) I4, -sqrt(T) I4]].
SymplecticTransform virtual_bs_transform(double transmissivity);

/// Lossless interferometer: TMSV propagated through BS, angular displacement,
/// BS. Returns the two-mode output state (zero mean).
GaussianState ideal_pipeline(const Scenario& scenario);

/// Thermal-coupled interferometer on four modes (two signal + two
/// environment): diag(TMSV, thermal x2) propagated through the embedded BS,
/// angular displacement, virtual BSs, BS. Returns the full four-mode output;
/// the caller marginalizes to the detected mode.
GaussianState thermal_pipeline(const Scenario& scenario, double n_thermal,
                               double transmissivity);

// Determinants of the detected mode's 2x2 covariance block for each noise
// case, and their slopes. The parity signal is 1/sqrt(det) and
// d<Pi>/dphi = det_slope / det^(3/2), so these closed forms are the shared
// currency of the signal and sensitivity layers and of the tests.

double det_ideal(const Scenario& scenario);
double det_slope_ideal(const Scenario& scenario);
double det_loss(const Scenario& scenario, double loss);
double det_slope_loss(const Scenario& scenario, double loss);
double det_thermal(const Scenario& scenario, double n_thermal,
                   double transmissivity);
double det_slope_thermal(const Scenario& scenario, double n_thermal,
                         double transmissivity);

/// Parity signal of the lossless scheme,
/// 1/sqrt(1 + N(N+2) cos^2(2*ell*phi)).
double signal_ideal(const Scenario& scenario);

/// Parity signal under uniform photon loss L.
double signal_loss(const Scenario& scenario, double loss);

/// Parity signal with Poissonian dark counts of rate d: exp(-2d) times the
/// ideal signal.
double signal_dark(const Scenario& scenario, double dark_rate);

/// Parity signal with thermal coupling of occupation n_th through virtual
/// BSs of transmissivity T.
double signal_thermal(const Scenario& scenario, double n_thermal,
                      double transmissivity);

/// Interference visibility of the ideal signal over phi: N/(N+2).
double visibility(const Scenario& scenario);

}  // namespace oam
