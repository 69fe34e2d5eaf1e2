#include "oamsense/fock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oamsense/parallel.hpp"

namespace oam {

namespace {

constexpr double kLeakageTarget = 1e-12;
constexpr int kCutoffCap = 128;
constexpr double kBsAngle = std::numbers::pi / 4.0;

void check_cutoff(int cutoff) {
  if (cutoff < 1) {
    throw std::invalid_argument("cutoff must be >= 1");
  }
}

// i^k for k mod 4, as (re, im) pairs.
constexpr double kQuarterRe[4] = {1.0, 0.0, -1.0, 0.0};
constexpr double kQuarterIm[4] = {0.0, 1.0, 0.0, -1.0};

}  // namespace

TwoModeFockState::TwoModeFockState(int cutoff) {
  check_cutoff(cutoff);
  amps_ = Eigen::MatrixXcd::Zero(cutoff, cutoff);
}

TwoModeFockState TwoModeFockState::padded(int new_cutoff) const {
  if (new_cutoff < cutoff()) {
    throw std::invalid_argument("padded cutoff must not shrink the grid");
  }
  TwoModeFockState out(new_cutoff);
  out.amps_.topLeftCorner(cutoff(), cutoff()) = amps_;
  return out;
}

TwoModeFockState tmsv_fock(double r, int cutoff) {
  check_cutoff(cutoff);
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("squeezing factor must be finite and >= 0");
  }
  const double th = std::tanh(r);
  const double t = th * th;  // N/(N+2)
  TwoModeFockState out(cutoff);
  double amp = std::sqrt(1.0 - t);
  const double ratio = th;
  for (int m = 0; m < cutoff; ++m) {
    out.amplitudes()(m, m) = amp;
    amp *= ratio;
  }
  return out;
}

BeamSplitterFock::BeamSplitterFock(int cutoff) : cutoff_(cutoff) {
  check_cutoff(cutoff);
  blocks_.resize(2 * cutoff - 1);
}

const BeamSplitterFock::Block& BeamSplitterFock::block(int n) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (blocks_[n]) {
      return *blocks_[n];
    }
  }
  // The generator a^dag b - a b^dag restricted to total photon number n is a
  // real skew-symmetric tridiagonal matrix; conjugating by diag(i^k) turns it
  // into i * S with S real symmetric tridiagonal, so the block unitary is
  // exp(eta G) = D^-1 V exp(i eta Lambda) V^T D.
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int k = 0; k < n; ++k) {
    const double c = std::sqrt(double(k + 1) * double(n - k));
    s(k + 1, k) = c;
    s(k, k + 1) = c;
  }
  auto built = std::make_shared<Block>();
  if (n == 0) {
    built->vecs = Eigen::MatrixXd::Ones(1, 1);
    built->phase_cos = Eigen::VectorXd::Ones(1);
    built->phase_sin = Eigen::VectorXd::Zero(1);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
    built->vecs = solver.eigenvectors();
    built->phase_cos = (kBsAngle * solver.eigenvalues()).array().cos();
    built->phase_sin = (kBsAngle * solver.eigenvalues()).array().sin();
  }
  std::lock_guard<std::mutex> lock(mutex_);
  if (!blocks_[n]) {
    blocks_[n] = std::move(built);
  }
  return *blocks_[n];
}

TwoModeFockState BeamSplitterFock::apply(const TwoModeFockState& state) const {
  if (state.cutoff() != cutoff_) {
    throw std::invalid_argument("state cutoff does not match the beam splitter");
  }
  const int p = cutoff_;
  const auto& in = state.amplitudes();
  TwoModeFockState result(p);
  auto& out = result.amplitudes();
  for (int n = 0; n <= 2 * (p - 1); ++n) {
    const int k_lo = std::max(0, n - p + 1);
    const int k_hi = std::min(n, p - 1);
    Eigen::VectorXd re = Eigen::VectorXd::Zero(n + 1);
    Eigen::VectorXd im = Eigen::VectorXd::Zero(n + 1);
    bool any = false;
    for (int k = k_lo; k <= k_hi; ++k) {
      const std::complex<double> c = in(k, n - k);
      if (c != 0.0) {
        any = true;
        // u = D v with D = diag(i^k)
        re(k) = kQuarterRe[k & 3] * c.real() - kQuarterIm[k & 3] * c.imag();
        im(k) = kQuarterRe[k & 3] * c.imag() + kQuarterIm[k & 3] * c.real();
      }
    }
    if (!any) {
      continue;
    }
    const Block& b = block(n);
    Eigen::VectorXd a_re = b.vecs.transpose() * re;
    Eigen::VectorXd a_im = b.vecs.transpose() * im;
    Eigen::VectorXd y_re =
        a_re.cwiseProduct(b.phase_cos) - a_im.cwiseProduct(b.phase_sin);
    Eigen::VectorXd y_im =
        a_re.cwiseProduct(b.phase_sin) + a_im.cwiseProduct(b.phase_cos);
    Eigen::VectorXd z_re = b.vecs * y_re;
    Eigen::VectorXd z_im = b.vecs * y_im;
    for (int k = k_lo; k <= k_hi; ++k) {
      // w = D^-1 z, then the pi phase on mode b: factor (-1)^(n-k)
      double wr = kQuarterRe[k & 3] * z_re(k) + kQuarterIm[k & 3] * z_im(k);
      double wi = kQuarterRe[k & 3] * z_im(k) - kQuarterIm[k & 3] * z_re(k);
      if ((n - k) & 1) {
        wr = -wr;
        wi = -wi;
      }
      out(k, n - k) = {wr, wi};
    }
  }
  return result;
}

TwoModeFockState apply_bs_fock(const TwoModeFockState& state) {
  return BeamSplitterFock(state.cutoff()).apply(state);
}

TwoModeFockState apply_phase_fock(const TwoModeFockState& state,
                                  double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("phase must be finite");
  }
  TwoModeFockState out(state.cutoff());
  for (int n = 0; n < state.cutoff(); ++n) {
    out.amplitudes().row(n) =
        std::polar(1.0, n * theta) * state.amplitudes().row(n);
  }
  return out;
}

double parity_fock(const TwoModeFockState& state, FockMode mode) {
  double parity = 0.0;
  const auto& a = state.amplitudes();
  for (int na = 0; na < state.cutoff(); ++na) {
    for (int nb = 0; nb < state.cutoff(); ++nb) {
      const int occ = (mode == FockMode::A) ? na : nb;
      const double w = std::norm(a(na, nb));
      parity += (occ & 1) ? -w : w;
    }
  }
  return parity;
}

int default_cutoff(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("squeezing factor must be finite and >= 0");
  }
  const double th = std::tanh(r);
  const double t = th * th;
  if (t <= 0.0) {
    return 1;
  }
  const double m = std::ceil(std::log(kLeakageTarget) / std::log(t));
  if (!(m >= 1.0)) {
    return 1;
  }
  return static_cast<int>(std::min<double>(m, kCutoffCap));
}

namespace {

double oracle_parity(const TwoModeFockState& after_first_bs,
                     const BeamSplitterFock& bs, int ell, double phi) {
  TwoModeFockState st =
      apply_phase_fock(after_first_bs, 2.0 * ell * phi);
  st = bs.apply(st);
  return parity_fock(st, FockMode::B);
}

}  // namespace

OracleResult run_ideal_oracle(const Scenario& scenario, int cutoff) {
  check_cutoff(cutoff);
  const int work = 2 * cutoff - 1;
  const TwoModeFockState input = tmsv_fock(scenario.r, cutoff).padded(work);
  const BeamSplitterFock bs(work);
  const TwoModeFockState mixed = bs.apply(input);
  const double th = std::tanh(scenario.r);
  const double leakage = std::pow(th * th, cutoff);
  return {oracle_parity(mixed, bs, scenario.ell, scenario.phi), leakage};
}

std::vector<double> oracle_sweep(double r, int ell,
                                 const std::vector<double>& phis, int cutoff,
                                 int jobs) {
  check_cutoff(cutoff);
  const int work = 2 * cutoff - 1;
  const TwoModeFockState input = tmsv_fock(r, cutoff).padded(work);
  const BeamSplitterFock bs(work);
  const TwoModeFockState mixed = bs.apply(input);
  return map_grid<double>(
      phis,
      [&](double phi) { return oracle_parity(mixed, bs, ell, phi); },
      jobs);
}

}  // namespace oam
