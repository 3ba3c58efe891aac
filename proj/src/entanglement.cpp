#include "wmcorr/entanglement.hpp"

#include <cmath>
#include <string>

#include "wmcorr/dynamics.hpp"

namespace wmcorr {

namespace {

void require_two_axes(const PointerWavefunction& phi, const char* what) {
  if (phi.dims() != 2) throw DimensionError(std::string(what) + " needs a 2-axis pointer");
}

}  // namespace

PointerWavefunction two_mode_gaussian(const Grid& grid, const TwoModeGaussianParams& params) {
  if (grid.dims() != 2) throw DimensionError("two_mode_gaussian needs a 2-axis grid");
  if (!(params.alpha > 0.0) || !(params.beta > 0.0) ||
      !(params.alpha * params.beta - params.gamma * params.gamma > 0.0)) {
    throw InvalidParams("two-mode Gaussian needs alpha, beta > 0 and alpha*beta > gamma^2");
  }
  // |psi|^2 = exp(-2 q^T M q) has covariance (4M)^-1; the wavefunction is
  // the Sigma-parameterized Gaussian with that covariance.
  const Eigen::Matrix2d sigma = two_mode_position_covariance(params);
  return gaussian_pointer(grid, sigma, Eigen::VectorXd::Zero(2), Eigen::VectorXd::Zero(2),
                          Eigen::MatrixXd::Zero(2, 2));
}

Eigen::Matrix2d two_mode_position_covariance(const TwoModeGaussianParams& params) {
  Eigen::Matrix2d m;
  m << params.alpha, params.gamma, params.gamma, params.beta;
  return (4.0 * m).inverse();
}

CrossCovariance c_matrix_direct(const PointerWavefunction& phi) {
  require_two_axes(phi, "c_matrix_direct");
  const MomentSet m = moments(phi);
  CrossCovariance c;
  c.entries << m.corr_qq(0, 1), m.corr_qp(0, 1), m.corr_qp(1, 0), m.corr_pp(0, 1);
  return c;
}

CrossCovariance c_matrix_from_shifts(const PointerWavefunction& phi_in,
                                     const WeakProbeConfig& probe) {
  require_two_axes(phi_in, "c_matrix_from_shifts");
  const PointerWavefunction phi = to_position(phi_in);
  const std::complex<double> aw = weak_value(probe.observable, probe.pre, probe.post);
  if (std::abs(aw.imag()) < kMinProbeImaginary) {
    throw UnusableProbe("Im(A)_w = " + std::to_string(aw.imag()) +
                        ": correlation terms are not observable with a real weak value");
  }
  const MomentSet before = moments(phi);
  const SignConvention& conv = probe.convention;
  const double unit = 2.0 * probe.strength * aw.imag();

  // Readout offset for the strong-readout variant: projector onto `post`,
  // eigenvalue 1.
  double offset = 0.0;
  std::optional<Observable> readout;
  if (probe.strong_readout) {
    const CVector& v = probe.post.amplitudes();
    readout = Observable(v * v.adjoint());
    offset = conv.readout * 1.0;
  }

  Eigen::Matrix2d entries;
  const Quadrature legs[2] = {Quadrature::q, Quadrature::p};
  for (int row = 0; row < 2; ++row) {
    JointState psi = make_joint(probe.pre, phi);
    psi = apply_couplings(
        psi, {CouplingSpec{probe.observable, 0, legs[row], probe.strength, CouplingMode::exact}});
    if (readout) psi = strong_readout(psi, *readout, 1);
    const MomentSet after = moments(postselect(psi, probe.post).pointer);
    const double dq2 = after.mean_q[1] - before.mean_q[1];
    const double dp2 = after.mean_p[1] - before.mean_p[1] - offset;
    entries(row, 0) = dq2 / (conv.im_q * unit);
    entries(row, 1) = dp2 / (conv.im_p * unit);
  }
  return CrossCovariance{entries};
}

bool is_entangled(const CrossCovariance& c) { return c.det() < -kDetTolerance; }

WeakProbeConfig default_probe(double strength) {
  return WeakProbeConfig{make_state({1.0, 1.0}), make_state({0.0, 1.0}), Observable::pauli_y(),
                         strength, false, SignConvention::frozen()};
}

}  // namespace wmcorr
