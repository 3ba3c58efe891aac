#include "wmcorr/pointer_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wmcorr/fft.hpp"
#include "wmcorr/kernels.hpp"

namespace wmcorr {

namespace {

using cplx = std::complex<double>;

constexpr double kNormTolerance = 1e-8;
constexpr double kCoverageSigmas = 6.0;

std::vector<double> centered(std::vector<double> f, double c) {
  for (double& v : f) v -= c;
  return f;
}

void require_dims(const Grid& grid, Eigen::Index n, const char* what) {
  if (n != grid.dims()) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(n) +
                         " but the grid has " + std::to_string(grid.dims()) +
                         " axes");
  }
}

}  // namespace

PointerWavefunction::PointerWavefunction(Grid grid, std::vector<cplx> amplitudes,
                                         Representation rep)
    : grid_(std::move(grid)), amps_(std::move(amplitudes)), rep_(rep) {
  if (amps_.size() != grid_.size()) {
    throw DimensionError("amplitude count does not match grid size");
  }
}

double PointerWavefunction::norm_sq() const {
  const double cell = rep_ == Representation::position ? grid_.cell_volume()
                                                       : grid_.momentum_cell_volume();
  return kernels::norm_sq(amps_) * cell;
}

PointerWavefunction PointerWavefunction::normalized() const {
  const double n = norm_sq();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw NormalizationError("cannot normalize a zero or non-finite wavefunction");
  }
  std::vector<cplx> a = amps_;
  kernels::scale(a, cplx(1.0 / std::sqrt(n)));
  return PointerWavefunction(grid_, std::move(a), rep_);
}

PointerWavefunction gaussian_pointer(const Grid& grid, const Eigen::MatrixXd& sigma,
                                     const Eigen::VectorXd& mean_q,
                                     const Eigen::VectorXd& mean_p,
                                     const Eigen::MatrixXd& theta) {
  const int d = grid.dims();
  if (sigma.rows() != d || sigma.cols() != d) {
    throw DimensionError("Sigma must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  if (theta.rows() != d || theta.cols() != d) {
    throw DimensionError("Theta must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  require_dims(grid, mean_q.size(), "mean_q");
  require_dims(grid, mean_p.size(), "mean_p");
  if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidCovariance("Sigma is not symmetric");
  }
  if ((theta - theta.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidParams("Theta is not symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw InvalidCovariance("Sigma is not positive definite");
  }
  const Eigen::MatrixXd precision = llt.solve(Eigen::MatrixXd::Identity(d, d));
  // Momentum covariance of this state: Sigma^-1/4 + Theta Sigma Theta.
  const Eigen::MatrixXd cov_p = 0.25 * precision + theta * sigma * theta;
  for (int a = 0; a < d; ++a) {
    const double q_reach = std::abs(mean_q[a]) + kCoverageSigmas * std::sqrt(sigma(a, a));
    if (q_reach > grid.half_extent(a)) {
      throw GridCoverage("axis " + std::to_string(a) + " needs half-extent >= " +
                         std::to_string(q_reach));
    }
    const double p_max = grid.dp(a) * static_cast<double>(grid.points(a) / 2);
    const double p_reach = std::abs(mean_p[a]) + kCoverageSigmas * std::sqrt(cov_p(a, a));
    if (p_reach > p_max) {
      throw GridCoverage("axis " + std::to_string(a) + " momentum range " +
                         std::to_string(p_max) + " below " + std::to_string(p_reach));
    }
  }

  std::vector<cplx> amps(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double x[kMaxAxes];
    for (int a = 0; a < d; ++a) {
      x[a] = grid.q(a, grid.index_along(static_cast<std::size_t>(i), a)) - mean_q[a];
    }
    double quad_p = 0.0, quad_t = 0.0, lin = 0.0;
    for (int a = 0; a < d; ++a) {
      lin += mean_p[a] * x[a];
      for (int b = 0; b < d; ++b) {
        quad_p += x[a] * precision(a, b) * x[b];
        quad_t += x[a] * theta(a, b) * x[b];
      }
    }
    amps[i] = std::polar(std::exp(-0.25 * quad_p), 0.5 * quad_t + lin);
  }
  return PointerWavefunction(grid, std::move(amps)).normalized();
}

PointerWavefunction gaussian_pointer(const Grid& grid, const Eigen::MatrixXd& sigma) {
  const int d = grid.dims();
  return gaussian_pointer(grid, sigma, Eigen::VectorXd::Zero(d), Eigen::VectorXd::Zero(d),
                          Eigen::MatrixXd::Zero(d, d));
}

double lg_default_extent(int l, double sigma) {
  return std::max(8.0 * sigma, kCoverageSigmas * sigma * std::sqrt(1.0 + std::abs(l)));
}

PointerWavefunction lg_mode(const Grid& grid, int l, double sigma) {
  if (grid.dims() != 2) throw DimensionError("lg_mode needs a 2-axis grid");
  if (!(sigma > 0.0)) throw InvalidParams("lg_mode sigma must be positive");
  const double reach = kCoverageSigmas * sigma * std::sqrt(1.0 + std::abs(l));
  for (int a = 0; a < 2; ++a) {
    if (grid.half_extent(a) < reach) {
      throw GridCoverage("lg_mode needs half-extent >= " + std::to_string(reach));
    }
  }
  const int order = std::abs(l);
  const double handed = l > 0 ? 1.0 : (l < 0 ? -1.0 : 0.0);
  std::vector<cplx> amps(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double x = grid.q(0, grid.index_along(k, 0));
    const double y = grid.q(1, grid.index_along(k, 1));
    cplx poly(1.0, 0.0);
    for (int j = 0; j < order; ++j) poly *= cplx(x, handed * y);
    amps[i] = poly * std::exp(-(x * x + y * y) / (4.0 * sigma * sigma));
  }
  return PointerWavefunction(grid, std::move(amps)).normalized();
}

PointerWavefunction to_momentum(const PointerWavefunction& phi) {
  if (phi.representation() == Representation::momentum) return phi;
  std::vector<cplx> a = phi.amplitudes();
  fft::to_momentum(phi.grid(), a);
  return PointerWavefunction(phi.grid(), std::move(a), Representation::momentum);
}

PointerWavefunction to_position(const PointerWavefunction& phi) {
  if (phi.representation() == Representation::position) return phi;
  std::vector<cplx> a = phi.amplitudes();
  fft::to_position(phi.grid(), a);
  return PointerWavefunction(phi.grid(), std::move(a), Representation::position);
}

std::vector<cplx> apply_momentum(const Grid& grid, const std::vector<cplx>& position_amps,
                                 int axis, double center) {
  std::vector<cplx> chi = position_amps;
  fft::to_momentum(grid, chi, axis);
  kernels::multiply(chi, centered(grid.momentum_field(axis), center));
  fft::to_position(grid, chi, axis);
  return chi;
}

MomentSet moments(const PointerWavefunction& phi_in) {
  const PointerWavefunction phi = to_position(phi_in);
  const Grid& grid = phi.grid();
  const int d = grid.dims();
  const double norm = phi.norm_sq();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw NormalizationError("pointer norm is " + std::to_string(norm));
  }
  const auto& a = phi.amplitudes();
  const double dv = grid.cell_volume();

  MomentSet m;
  m.mean_q.resize(d);
  m.mean_p.resize(d);
  m.cov_qq.resize(d, d);
  m.cov_pp.resize(d, d);
  m.cov_qp.resize(d, d);

  std::vector<std::vector<double>> xq(d);
  for (int l = 0; l < d; ++l) {
    const auto q = grid.position_field(l);
    m.mean_q[l] = kernels::weighted_norm(a, q) * dv;
    xq[l] = centered(q, m.mean_q[l]);
  }
  for (int l = 0; l < d; ++l) {
    for (int k = l; k < d; ++k) {
      m.cov_qq(l, k) = m.cov_qq(k, l) = kernels::weighted_norm2(a, xq[l], xq[k]) * dv;
    }
  }

  const PointerWavefunction mom = to_momentum(phi);
  const auto& b = mom.amplitudes();
  const double dvp = grid.momentum_cell_volume();
  std::vector<std::vector<double>> xp(d);
  for (int l = 0; l < d; ++l) {
    const auto p = grid.momentum_field(l);
    m.mean_p[l] = kernels::weighted_norm(b, p) * dvp;
    xp[l] = centered(p, m.mean_p[l]);
  }
  for (int l = 0; l < d; ++l) {
    for (int k = l; k < d; ++k) {
      m.cov_pp(l, k) = m.cov_pp(k, l) = kernels::weighted_norm2(b, xp[l], xp[k]) * dvp;
    }
  }

  for (int k = 0; k < d; ++k) {
    const auto chi = apply_momentum(grid, a, k, m.mean_p[k]);
    for (int l = 0; l < d; ++l) {
      const cplx v = kernels::braket(a, xq[l], chi) * dv;
      m.cov_qp(l, k) = v.real();
      if (l != k) m.max_imag_residue = std::max(m.max_imag_residue, std::abs(v.imag()));
    }
  }
  return m;
}

PointerWavefunction displace_momentum(const PointerWavefunction& phi_in,
                                      const std::vector<double>& shifts) {
  const PointerWavefunction phi = to_position(phi_in);
  const Grid& grid = phi.grid();
  if (static_cast<int>(shifts.size()) != grid.dims()) {
    throw DimensionError("one momentum shift per axis required");
  }
  std::vector<cplx> a = phi.amplitudes();
  for (int l = 0; l < grid.dims(); ++l) {
    if (shifts[l] != 0.0) kernels::phase(a, grid.position_field(l), shifts[l]);
  }
  return PointerWavefunction(grid, std::move(a));
}

}  // namespace wmcorr
