#include "oamsense/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oam {

namespace {

constexpr double kSymmetryTol = 1e-12;

void require_finite(const Eigen::VectorXd& v, const char* what) {
  if (!v.allFinite()) {
    throw std::invalid_argument(std::string(what) + " contains a non-finite entry");
  }
}

void require_finite(const Eigen::MatrixXd& m, const char* what) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) + " contains a non-finite entry");
  }
}

}  // namespace

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd covariance)
    : mean_(std::move(mean)), covariance_(std::move(covariance)) {
  const auto dim = mean_.size();
  if (dim <= 0 || dim % 2 != 0) {
    throw std::invalid_argument("mean length must be a positive even number");
  }
  if (covariance_.rows() != dim || covariance_.cols() != dim) {
    throw std::invalid_argument("covariance must be square of the mean's length");
  }
  require_finite(mean_, "mean");
  require_finite(covariance_, "covariance");
  if ((covariance_ - covariance_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw std::invalid_argument("covariance is not symmetric");
  }
  // Positive definiteness; a Cholesky factorization succeeds exactly when all
  // eigenvalues are positive.
  Eigen::LLT<Eigen::MatrixXd> llt(covariance_);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("covariance is not positive definite");
  }
  modes_ = static_cast<int>(dim / 2);
}

GaussianState GaussianState::vacuum(int modes) {
  if (modes <= 0) {
    throw std::invalid_argument("mode count must be positive");
  }
  return GaussianState(Eigen::VectorXd::Zero(2 * modes),
                       Eigen::MatrixXd::Identity(2 * modes, 2 * modes));
}

SymplecticTransform::SymplecticTransform(Eigen::MatrixXd matrix)
    : matrix_(std::move(matrix)) {
  const auto dim = matrix_.rows();
  if (dim <= 0 || dim % 2 != 0 || matrix_.cols() != dim) {
    throw std::invalid_argument("transform must be square with even dimension");
  }
  require_finite(matrix_, "transform matrix");
  modes_ = static_cast<int>(dim / 2);
}

SymplecticTransform SymplecticTransform::identity(int modes) {
  if (modes <= 0) {
    throw std::invalid_argument("mode count must be positive");
  }
  return SymplecticTransform(Eigen::MatrixXd::Identity(2 * modes, 2 * modes));
}

SymplecticTransform operator*(const SymplecticTransform& lhs,
                              const SymplecticTransform& rhs) {
  if (lhs.modes() != rhs.modes()) {
    throw std::invalid_argument("cannot compose transforms on different mode counts");
  }
  return SymplecticTransform(lhs.matrix() * rhs.matrix());
}

GaussianState propagate(const GaussianState& state,
                        const SymplecticTransform& transform) {
  if (state.modes() != transform.modes()) {
    throw std::invalid_argument(
        "propagate: state has " + std::to_string(state.modes()) +
        " modes but transform acts on " + std::to_string(transform.modes()));
  }
  const Eigen::MatrixXd& s = transform.matrix();
  Eigen::MatrixXd cov = s * state.covariance() * s.transpose();
  cov = ((cov + cov.transpose()) / 2.0).eval();  // scrub rounding asymmetry
  return GaussianState(s * state.mean(), std::move(cov));
}

double evaluate_wigner(const GaussianState& state,
                       const Eigen::VectorXd& point) {
  if (point.size() != 2 * state.modes()) {
    throw std::invalid_argument("phase-space point has wrong length");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(state.covariance());
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("non-physical state: singular covariance");
  }
  const Eigen::VectorXd d = point - state.mean();
  const double quad = d.dot(llt.solve(d));
  const double sqrt_det = llt.matrixLLT().diagonal().prod();
  const double norm =
      std::pow(std::numbers::pi, state.modes()) * sqrt_det;
  return std::exp(-quad) / norm;
}

GaussianState marginal(const GaussianState& state,
                       const std::vector<int>& mode_indices) {
  if (mode_indices.empty()) {
    throw std::invalid_argument("marginal: empty mode list");
  }
  for (std::size_t i = 0; i < mode_indices.size(); ++i) {
    if (mode_indices[i] < 0 || mode_indices[i] >= state.modes()) {
      throw std::invalid_argument("marginal: mode index out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (mode_indices[j] == mode_indices[i]) {
        throw std::invalid_argument("marginal: duplicate mode index");
      }
    }
  }
  const int k = static_cast<int>(mode_indices.size());
  Eigen::VectorXd mean(2 * k);
  Eigen::MatrixXd cov(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) {
    for (int a = 0; a < 2; ++a) {
      mean(2 * i + a) = state.mean()(2 * mode_indices[i] + a);
      for (int j = 0; j < k; ++j) {
        for (int b = 0; b < 2; ++b) {
          cov(2 * i + a, 2 * j + b) =
              state.covariance()(2 * mode_indices[i] + a,
                                 2 * mode_indices[j] + b);
        }
      }
    }
  }
  return GaussianState(std::move(mean), std::move(cov));
}

double parity_expectation(const GaussianState& state, int mode) {
  if (mode < 0 || mode >= state.modes()) {
    throw std::invalid_argument("parity_expectation: mode index out of range");
  }
  const int i = 2 * mode;
  const Eigen::MatrixXd& g = state.covariance();
  const double a = g(i, i);
  const double b = g(i, i + 1);
  const double c = g(i + 1, i);
  const double d = g(i + 1, i + 1);
  const double det = a * d - b * c;
  if (!(det > 0.0)) {
    throw std::domain_error("non-physical state: singular parity block");
  }
  const double m0 = state.mean()(i);
  const double m1 = state.mean()(i + 1);
  // m^T g^-1 m with the adjugate inverse of the 2x2 block.
  const double quad = (d * m0 * m0 - (b + c) * m0 * m1 + a * m1 * m1) / det;
  return std::exp(-quad) / std::sqrt(det);
}

GaussianState apply_uniform_loss(const GaussianState& state, double loss) {
  if (!(loss >= 0.0 && loss <= 1.0)) {
    throw std::invalid_argument("loss must lie in [0, 1]");
  }
  const auto dim = state.mean().size();
  Eigen::MatrixXd cov =
      (1.0 - loss) * state.covariance() +
      loss * Eigen::MatrixXd::Identity(dim, dim);
  return GaussianState(std::sqrt(1.0 - loss) * state.mean(), std::move(cov));
}

}  // namespace oam
