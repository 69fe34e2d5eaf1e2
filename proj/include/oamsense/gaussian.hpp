#pragma once

#include <vector>

#include <Eigen/Dense>

namespace oam {

/// Gaussian state of k bosonic modes, stored as first and second moments.
///
/// Quadratures are ordered (x1, p1, x2, p2, ...) and are dimensionless with
/// vacuum variance 1: the k-mode vacuum has zero mean and identity covariance.
/// The covariance must be symmetric (to 1e-12) and positive definite; both are
/// enforced on construction, as is finiteness of every entry.
class GaussianState {
 public:
  GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd covariance);

  static GaussianState vacuum(int modes);

  int modes() const { return modes_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& covariance() const { return covariance_; }

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd covariance_;
  int modes_;
};

/// Linear phase-space map of a lossless optical element: M -> S*M,
/// Gamma -> S*Gamma*S^T. Composition follows matrix-multiplication order,
/// so `last * ... * first` is the element sequence applied first-to-last.
class SymplecticTransform {
 public:
  explicit SymplecticTransform(Eigen::MatrixXd matrix);

  static SymplecticTransform identity(int modes);

  int modes() const { return modes_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXd matrix_;
  int modes_;
};

SymplecticTransform operator*(const SymplecticTransform& lhs,
                              const SymplecticTransform& rhs);

/// Propagates a state through a transform: mean -> S*mean, cov -> S*cov*S^T.
/// Throws std::invalid_argument on a mode-count mismatch.
GaussianState propagate(const GaussianState& state,
                        const SymplecticTransform& transform);

/// Wigner function exp(-(X-M)^T Gamma^-1 (X-M)) / (pi^k sqrt(det Gamma))
/// at a phase-space point of length 2k.
double evaluate_wigner(const GaussianState& state,
                       const Eigen::VectorXd& point);

/// Reduced state on the given modes: sub-vector of the mean and the matching
/// principal submatrix of the covariance. Indices must be distinct, in range
/// and non-empty.
GaussianState marginal(const GaussianState& state,
                       const std::vector<int>& mode_indices);

/// Expectation of (-1)^n on one mode: pi times the mode's marginal Wigner
/// function at the phase-space origin, i.e. exp(-m^T g^-1 m)/sqrt(det g) over
/// the mode's 2x2 covariance block. Equals P_even - P_odd; lies in (0, 1] for
/// the zero-mean states produced in this project. The 2x2 inverse uses the
/// closed adjugate formula.
double parity_expectation(const GaussianState& state, int mode);

/// Uniform linear loss on every mode: cov -> (1-L)*cov + L*I,
/// mean -> sqrt(1-L)*mean. L must lie in [0, 1].
GaussianState apply_uniform_loss(const GaussianState& state, double loss);

}  // namespace oam
