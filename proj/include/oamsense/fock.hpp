#pragma once

#include <complex>
#include <memory>
#include <mutex>
#include <vector>

#include <Eigen/Dense>

#include "oamsense/interferometer.hpp"

namespace oam {

/// Pure two-mode state on a per-mode-truncated Fock grid: complex amplitudes
/// c(n_a, n_b) for 0 <= n_a, n_b < cutoff.
class TwoModeFockState {
 public:
  explicit TwoModeFockState(int cutoff);

  int cutoff() const { return static_cast<int>(amps_.rows()); }
  const Eigen::MatrixXcd& amplitudes() const { return amps_; }
  Eigen::MatrixXcd& amplitudes() { return amps_; }
  std::complex<double> amplitude(int n_a, int n_b) const {
    return amps_(n_a, n_b);
  }

  /// Sum of |c|^2; at most 1, and 1 - leakage for a truncated physical state.
  double norm() const { return amps_.squaredNorm(); }

  /// Same state embedded in a larger grid (zero padding).
  TwoModeFockState padded(int new_cutoff) const;

 private:
  Eigen::MatrixXcd amps_;
};

enum class FockMode { A, B };

/// Two-mode squeezed vacuum truncated at `cutoff` photons per mode:
/// c(m, m) = sqrt((1-t) t^m) with t = N/(N+2), zero elsewhere. The truncation
/// leakage 1 - norm equals t^cutoff.
TwoModeFockState tmsv_fock(double r, int cutoff);

/// 50:50 beam splitter whose Heisenberg action on the quadratures equals the
/// 4x4 bs_transform. It conserves total photon number, so it is applied
/// blockwise: each block's unitary comes from the spectral decomposition of
/// the tridiagonal coupling generator and is exact to machine precision on
/// blocks n_a + n_b < cutoff; blocks spilling past the per-mode grid are
/// clipped to it (the accuracy degradation near the cutoff is documented
/// behaviour, not an error). Block factors are built lazily and cached, so
/// reuse one instance across repeated applications at the same cutoff.
class BeamSplitterFock {
 public:
  explicit BeamSplitterFock(int cutoff);

  TwoModeFockState apply(const TwoModeFockState& state) const;

 private:
  struct Block {
    Eigen::MatrixXd vecs;        // eigenvectors of the symmetric generator
    Eigen::VectorXd phase_cos;   // cos(eta * lambda_k)
    Eigen::VectorXd phase_sin;   // sin(eta * lambda_k)
  };

  const Block& block(int total_photons) const;

  int cutoff_;
  mutable std::vector<std::shared_ptr<const Block>> blocks_;
  mutable std::mutex mutex_;
};

/// One-shot convenience wrapper around BeamSplitterFock.
TwoModeFockState apply_bs_fock(const TwoModeFockState& state);

/// Phase theta on mode A: c(n, m) -> exp(i n theta) c(n, m). For the
/// interferometer theta = 2*ell*phi.
TwoModeFockState apply_phase_fock(const TwoModeFockState& state, double theta);

/// Parity of one mode from the photon-number statistics:
/// sum over the grid of (-1)^(occupation of that mode) |c|^2.
double parity_fock(const TwoModeFockState& state, FockMode mode);

/// Smallest cutoff M with t^M <= 1e-12 (t = N/(N+2)), capped at 128.
int default_cutoff(double r);

struct OracleResult {
  double parity;
  double leakage;  // TMSV truncation leakage t^cutoff
};

/// Brute-force ground truth for the lossless scheme: TMSV -> BS -> phase
/// 2*ell*phi on mode A -> BS -> parity of mode B, in Fock space. Internally
/// the working grid is padded to 2*cutoff - 1 per mode so every
/// photon-number block reachable from the truncated TMSV stays complete;
/// the returned leakage bound is the only approximation.
OracleResult run_ideal_oracle(const Scenario& scenario, int cutoff);

/// run_ideal_oracle over a phi grid with the beam splitter built once and
/// shared; points are evaluated concurrently when jobs > 1 and ordered by
/// grid index either way.
std::vector<double> oracle_sweep(double r, int ell,
                                 const std::vector<double>& phis, int cutoff,
                                 int jobs = 1);

}  // namespace oam
