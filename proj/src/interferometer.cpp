#include "oamsense/interferometer.hpp"

#include <cmath>
#include <stdexcept>

namespace oam {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

void check_loss(double loss) {
  require_finite(loss, "loss");
  if (!(loss >= 0.0 && loss <= 1.0)) {
    throw std::invalid_argument("loss must lie in [0, 1]");
  }
}

void check_thermal(double n_thermal, double transmissivity) {
  require_finite(n_thermal, "n_thermal");
  require_finite(transmissivity, "transmissivity");
  if (!(n_thermal >= 0.0)) {
    throw std::invalid_argument("n_thermal must be >= 0");
  }
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw std::invalid_argument("transmissivity must lie in [0, 1]");
  }
}

}  // namespace

Scenario::Scenario(double r_in, int ell_in, double phi_in)
    : r(r_in), ell(ell_in), phi(phi_in) {
  require_finite(r, "squeezing factor");
  require_finite(phi, "angular displacement");
  if (!(r >= 0.0)) {
    throw std::invalid_argument("squeezing factor must be >= 0");
  }
  if (ell < 1) {
    throw std::invalid_argument("OAM quantum number must be >= 1");
  }
}

double Scenario::mean_photon_number() const {
  const double s = std::sinh(r);
  return 2.0 * s * s;
}

double squeezing_from_mean_photons(double nbar) {
  require_finite(nbar, "mean photon number");
  if (!(nbar >= 0.0)) {
    throw std::invalid_argument("mean photon number must be >= 0");
  }
  return std::asinh(std::sqrt(nbar / 2.0));
}

NoiseConfig::NoiseConfig(double loss_in, double dark_rate_in,
                         double n_thermal_in, double transmissivity_in)
    : loss(loss_in),
      dark_rate(dark_rate_in),
      n_thermal(n_thermal_in),
      transmissivity(transmissivity_in) {
  check_loss(loss);
  require_finite(dark_rate, "dark_rate");
  if (!(dark_rate >= 0.0)) {
    throw std::invalid_argument("dark_rate must be >= 0");
  }
  check_thermal(n_thermal, transmissivity);
}

GaussianState tmsv_state(double r) {
  require_finite(r, "squeezing factor");
  if (!(r >= 0.0)) {
    throw std::invalid_argument("squeezing factor must be >= 0");
  }
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(4, 4);
  cov(0, 0) = cov(1, 1) = cov(2, 2) = cov(3, 3) = c;
  cov(0, 2) = cov(2, 0) = s;
  cov(1, 3) = cov(3, 1) = -s;
  return GaussianState(Eigen::VectorXd::Zero(4), std::move(cov));
}

GaussianState thermal_state(double n_thermal) {
  check_thermal(n_thermal, 1.0);
  return GaussianState(Eigen::VectorXd::Zero(2),
                       (2.0 * n_thermal + 1.0) * Eigen::MatrixXd::Identity(2, 2));
}

SymplecticTransform bs_transform(int total_modes) {
  if (total_modes != 2 && total_modes != 4) {
    throw std::invalid_argument("bs_transform supports 2 or 4 total modes");
  }
  const double h = 1.0 / std::sqrt(2.0);
  const Eigen::MatrixXd i2 = Eigen::MatrixXd::Identity(2, 2);
  Eigen::MatrixXd m =
      Eigen::MatrixXd::Identity(2 * total_modes, 2 * total_modes);
  m.block(0, 0, 2, 2) = h * i2;
  m.block(0, 2, 2, 2) = h * i2;
  m.block(2, 0, 2, 2) = h * i2;
  m.block(2, 2, 2, 2) = -h * i2;
  return SymplecticTransform(std::move(m));
}

SymplecticTransform angular_displacement_transform(int ell, double phi,
                                                   int total_modes) {
  if (ell < 1) {
    throw std::invalid_argument("OAM quantum number must be >= 1");
  }
  require_finite(phi, "angular displacement");
  if (total_modes != 2 && total_modes != 4) {
    throw std::invalid_argument(
        "angular_displacement_transform supports 2 or 4 total modes");
  }
  const double theta = 2.0 * ell * phi;
  Eigen::MatrixXd m =
      Eigen::MatrixXd::Identity(2 * total_modes, 2 * total_modes);
  m(0, 0) = std::cos(theta);
  m(0, 1) = -std::sin(theta);
  m(1, 0) = std::sin(theta);
  m(1, 1) = std::cos(theta);
  return SymplecticTransform(std::move(m));
}

SymplecticTransform virtual_bs_transform(double transmissivity) {
  check_thermal(0.0, transmissivity);
  const double t = std::sqrt(transmissivity);
  const double u = std::sqrt(1.0 - transmissivity);
  const Eigen::MatrixXd i4 = Eigen::MatrixXd::Identity(4, 4);
  Eigen::MatrixXd m(8, 8);
  m.block(0, 0, 4, 4) = t * i4;
  m.block(0, 4, 4, 4) = u * i4;
  m.block(4, 0, 4, 4) = u * i4;
  m.block(4, 4, 4, 4) = -t * i4;
  return SymplecticTransform(std::move(m));
}

GaussianState ideal_pipeline(const Scenario& scenario) {
  const auto bs = bs_transform(2);
  const auto s =
      bs * angular_displacement_transform(scenario.ell, scenario.phi, 2) * bs;
  return propagate(tmsv_state(scenario.r), s);
}

GaussianState thermal_pipeline(const Scenario& scenario, double n_thermal,
                               double transmissivity) {
  check_thermal(n_thermal, transmissivity);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Identity(8, 8);
  cov.block(0, 0, 4, 4) = tmsv_state(scenario.r).covariance();
  cov.block(4, 4, 4, 4) *= 2.0 * n_thermal + 1.0;
  const auto bs = bs_transform(4);
  const auto s = bs * virtual_bs_transform(transmissivity) *
                 angular_displacement_transform(scenario.ell, scenario.phi, 4) *
                 bs;
  return propagate(GaussianState(Eigen::VectorXd::Zero(8), std::move(cov)), s);
}

double det_ideal(const Scenario& sc) {
  const double nb = sc.mean_photon_number();
  const double c = std::cos(2.0 * sc.ell * sc.phi);
  return 1.0 + nb * (nb + 2.0) * c * c;
}

double det_slope_ideal(const Scenario& sc) {
  const double nb = sc.mean_photon_number();
  return sc.ell * nb * (nb + 2.0) * std::sin(4.0 * sc.ell * sc.phi);
}

double det_loss(const Scenario& sc, double loss) {
  check_loss(loss);
  const double nb = sc.mean_photon_number();
  const double q = 1.0 - loss;
  return 1.0 +
         0.5 * q * q *
             (nb * (nb + 2.0) * std::cos(4.0 * sc.ell * sc.phi) + nb * nb) +
         (1.0 - loss * loss) * nb;
}

double det_slope_loss(const Scenario& sc, double loss) {
  check_loss(loss);
  const double nb = sc.mean_photon_number();
  const double q = 1.0 - loss;
  return sc.ell * q * q * nb * (nb + 2.0) * std::sin(4.0 * sc.ell * sc.phi);
}

double det_thermal(const Scenario& sc, double n_thermal,
                   double transmissivity) {
  check_thermal(n_thermal, transmissivity);
  const double nb = sc.mean_photon_number();
  const double t = transmissivity;
  const double u = 1.0 - t;
  const double nt = n_thermal;
  const double theta = 2.0 * sc.ell * sc.phi;
  const double ct = std::cos(theta);
  return (t * t / 4.0) *
             (2.0 * ct * ct * (2.0 * nb * (nb + 2.0) + 1.0) -
              std::cos(2.0 * theta) + 7.0) +
         1.0 + 4.0 * (nt * nt + nt) * u * u - 2.0 * t +
         2.0 * t * (2.0 * nt + 1.0) * u * (nb + 1.0);
}

double det_slope_thermal(const Scenario& sc, double n_thermal,
                         double transmissivity) {
  check_thermal(n_thermal, transmissivity);
  const double nb = sc.mean_photon_number();
  return sc.ell * transmissivity * transmissivity *
         std::sin(4.0 * sc.ell * sc.phi) * nb * (nb + 2.0);
}

double signal_ideal(const Scenario& sc) { return 1.0 / std::sqrt(det_ideal(sc)); }

double signal_loss(const Scenario& sc, double loss) {
  return 1.0 / std::sqrt(det_loss(sc, loss));
}

double signal_dark(const Scenario& sc, double dark_rate) {
  require_finite(dark_rate, "dark_rate");
  if (!(dark_rate >= 0.0)) {
    throw std::invalid_argument("dark_rate must be >= 0");
  }
  return std::exp(-2.0 * dark_rate) * signal_ideal(sc);
}

double signal_thermal(const Scenario& sc, double n_thermal,
                      double transmissivity) {
  return 1.0 / std::sqrt(det_thermal(sc, n_thermal, transmissivity));
}

double visibility(const Scenario& sc) {
  const double nb = sc.mean_photon_number();
  return nb / (nb + 2.0);
}

}  // namespace oam
