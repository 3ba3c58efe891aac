#include "wmcorr/analytic_shifts.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wmcorr {

namespace {

using cplx = std::complex<double>;

// Symmetrized covariance between target (t, target_quad) and the coupled
// quadrature (j, xi). Same-axis q-p entries are dropped (stationary pointer).
double cross_cov(const MomentSet& m, int t, Quadrature target, int j, Quadrature xi) {
  if (target == Quadrature::q && xi == Quadrature::q) return m.cov_qq(t, j);
  if (target == Quadrature::p && xi == Quadrature::p) return m.cov_pp(t, j);
  if (t == j) return 0.0;
  return target == Quadrature::q ? m.cov_qp(t, j) : m.cov_qp(j, t);
}

void require_moment_dims(const MomentSet& m, int d, const char* what) {
  if (m.dims() != d) {
    throw DimensionError(std::string(what) + " needs " + std::to_string(d) +
                         "-axis moments, got " + std::to_string(m.dims()));
  }
}

}  // namespace

ShiftPrediction predict_general(const MomentSet& m, const std::vector<WeakTerm>& terms,
                                std::optional<ReadoutShift> readout,
                                const SignConvention& conv) {
  const int d = m.dims();
  ShiftPrediction out;
  out.delta_q = Eigen::VectorXd::Zero(d);
  out.delta_p = Eigen::VectorXd::Zero(d);
  for (const auto& k : terms) {
    if (k.axis < 0 || k.axis >= d) throw DimensionError("coupling axis out of range");
    const double re = k.weak_value.real();
    const double im = k.weak_value.imag();
    for (int t = 0; t < d; ++t) {
      out.delta_q[t] += conv.im_q * 2.0 * k.strength * im *
                        cross_cov(m, t, Quadrature::q, k.axis, k.quadrature);
      out.delta_p[t] += conv.im_p * 2.0 * k.strength * im *
                        cross_cov(m, t, Quadrature::p, k.axis, k.quadrature);
    }
    // [xi, conjugate] commutator term.
    if (k.quadrature == Quadrature::q) {
      out.delta_p[k.axis] += conv.re * k.strength * re;
    } else {
      out.delta_q[k.axis] -= conv.re * k.strength * re;
    }
  }
  if (readout) {
    if (readout->axis < 0 || readout->axis >= d) throw DimensionError("readout axis out of range");
    out.delta_p[readout->axis] += conv.readout * readout->eigenvalue;
    out.includes_readout_offset = true;
  }
  return out;
}

ShiftPrediction predict_sequential(const MomentSet& m, double lambda1, double lambda2,
                                   cplx a1w, cplx a2w, double a3l,
                                   const SignConvention& conv) {
  require_moment_dims(m, 3, "predict_sequential");
  const double b1 = a1w.imag(), b2 = a2w.imag();
  const int s = conv.im_q, sp = conv.im_p, r = conv.re;
  ShiftPrediction out;
  out.delta_q.resize(3);
  out.delta_p.resize(3);
  out.delta_q[0] = s * (2 * lambda1 * b1 * m.var_q(0) + 2 * lambda2 * b2 * m.corr_qq(0, 1));
  out.delta_q[1] = s * (2 * lambda2 * b2 * m.var_q(1) + 2 * lambda1 * b1 * m.corr_qq(0, 1));
  out.delta_q[2] = s * (2 * lambda1 * b1 * m.corr_qq(0, 2) + 2 * lambda2 * b2 * m.corr_qq(1, 2));
  out.delta_p[0] = r * lambda1 * a1w.real() + sp * 2 * lambda2 * b2 * m.corr_qp(1, 0);
  out.delta_p[1] = r * lambda2 * a2w.real() + sp * 2 * lambda1 * b1 * m.corr_qp(0, 1);
  out.delta_p[2] = conv.readout * a3l +
                   sp * (2 * lambda1 * b1 * m.corr_qp(0, 2) + 2 * lambda2 * b2 * m.corr_qp(1, 2));
  out.includes_readout_offset = true;
  return out;
}

ShiftPrediction predict_single(const MomentSet& m, double lambda, cplx aw, double a2l,
                               const SignConvention& conv) {
  require_moment_dims(m, 2, "predict_single");
  const double a = aw.real(), b = aw.imag();
  ShiftPrediction out;
  out.delta_q.resize(2);
  out.delta_p.resize(2);
  out.delta_q[0] = conv.im_q * 2 * lambda * b * m.var_q(0);
  out.delta_q[1] = conv.im_q * 2 * lambda * b * m.corr_qq(0, 1);
  out.delta_p[0] = conv.re * lambda * a;
  out.delta_p[1] = conv.readout * a2l + conv.im_p * 2 * lambda * b * m.corr_qp(0, 1);
  out.includes_readout_offset = a2l != 0.0;
  return out;
}

ShiftPrediction predict_lg(int l, double g, cplx aw, cplx bw, const SignConvention& conv) {
  ShiftPrediction out;
  out.delta_q.resize(2);
  out.delta_q[0] = g * (-conv.re * aw.real() + conv.im_q * l * bw.imag());
  out.delta_q[1] = g * (-conv.re * bw.real() - conv.im_q * l * aw.imag());
  return out;
}

double lg_compatibility(const MomentSet& m, int l) {
  require_moment_dims(m, 2, "lg_compatibility");
  const double half = 0.5 * l;
  return std::max({std::abs(m.corr_qp(0, 1) - half), std::abs(m.corr_qp(1, 0) + half),
                   std::abs(m.corr_qq(0, 1))});
}

double lg_equal_sign_residual(const MomentSet& m, int l) {
  require_moment_dims(m, 2, "lg_equal_sign_residual");
  const double half = 0.5 * l;
  return std::max({std::abs(m.corr_qp(1, 0) - half), std::abs(m.corr_qp(0, 1) - half),
                   std::abs(m.corr_qq(0, 1))});
}

namespace {

int sign_of(double simulated, double unit_prediction) {
  if (std::abs(simulated) < 1e-3 * std::abs(unit_prediction) || unit_prediction == 0.0) {
    throw Error("CalibrationError", "calibration signal too small to fix a sign");
  }
  return (simulated > 0) == (unit_prediction > 0) ? 1 : -1;
}

struct CalibrationRun {
  MomentSet before;
  MomentSet after;
};

CalibrationRun run_single(const PointerWavefunction& phi, const SystemState& pre,
                          const SystemState& post, const Observable& a, double lambda,
                          std::optional<Observable> readout = std::nullopt) {
  JointState psi = make_joint(pre, phi);
  psi = apply_couplings(psi, {CouplingSpec{a, 0, Quadrature::q, lambda, CouplingMode::exact}});
  if (readout) psi = strong_readout(psi, *readout, 1);
  return {moments(phi), moments(postselect(psi, post).pointer)};
}

}  // namespace

SignConvention calibrate_convention() {
  const Grid grid = Grid::uniform(2, 128, 8.0);
  const double lambda = 0.05;
  const Observable z = Observable::pauli_z();
  const SystemState plus = make_state({1.0, 1.0});
  SignConvention conv;

  // Aw = i on an uncorrelated Gaussian fixes s.
  {
    const auto phi = gaussian_pointer(grid, Eigen::MatrixXd::Identity(2, 2));
    const auto run = run_single(phi, plus, make_state({1.0, cplx(0, 1)}), z, lambda);
    conv.im_q = sign_of(run.after.mean_q[0] - run.before.mean_q[0],
                        2 * lambda * run.before.var_q(0));
  }
  // Real weak value fixes r.
  {
    const auto phi = gaussian_pointer(grid, Eigen::MatrixXd::Identity(2, 2));
    const auto post = make_state({std::cos(0.3), std::sin(0.3)});
    const cplx aw = weak_value(z, plus, post);
    const auto run = run_single(phi, plus, post, z, lambda);
    conv.re = sign_of(run.after.mean_p[0] - run.before.mean_p[0], lambda * aw.real());
  }
  // Aw = i with a q1-p2 cross-correlation (quadratic phase) fixes s'.
  {
    Eigen::MatrixXd theta(2, 2);
    theta << 0.0, 0.4, 0.4, 0.0;
    const auto phi = gaussian_pointer(grid, Eigen::MatrixXd::Identity(2, 2),
                                      Eigen::VectorXd::Zero(2), Eigen::VectorXd::Zero(2), theta);
    const auto run = run_single(phi, plus, make_state({1.0, cplx(0, 1)}), z, lambda);
    conv.im_p = sign_of(run.after.mean_p[1] - run.before.mean_p[1],
                        2 * lambda * run.before.corr_qp(0, 1));
  }
  // Strong readout of a projector, outcome eigenvalue 1, fixes the offset sign.
  {
    const auto phi = gaussian_pointer(grid, Eigen::MatrixXd::Identity(2, 2));
    const auto one = make_state({0.0, 1.0});
    const auto run = run_single(phi, one, one, z, 0.0, Observable::basis_projector(2, 1));
    conv.readout = sign_of(run.after.mean_p[1] - run.before.mean_p[1], 1.0);
  }
  return conv;
}

}  // namespace wmcorr
