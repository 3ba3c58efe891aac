#pragma once

// Discretized multimode pointer wavefunctions and their moment functionals.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "wmcorr/errors.hpp"
#include "wmcorr/grid.hpp"

namespace wmcorr {

enum class Representation { position, momentum };

class PointerWavefunction {
 public:
  PointerWavefunction(Grid grid, std::vector<std::complex<double>> amplitudes,
                      Representation rep = Representation::position);

  const Grid& grid() const noexcept { return grid_; }
  int dims() const noexcept { return grid_.dims(); }
  Representation representation() const noexcept { return rep_; }
  const std::vector<std::complex<double>>& amplitudes() const noexcept {
    return amps_;
  }

  /// sum |phi|^2 times the cell volume of the current representation.
  double norm_sq() const;
  PointerWavefunction normalized() const;

 private:
  Grid grid_;
  std::vector<std::complex<double>> amps_;
  Representation rep_;
};

/// Centered first and second moments of the position and momentum
/// quadratures. cov_qp(l, m) = <q_l p_m> - <q_l><p_m>; for l == m the
/// symmetrized product is used.
struct MomentSet {
  Eigen::VectorXd mean_q;
  Eigen::VectorXd mean_p;
  Eigen::MatrixXd cov_qq;
  Eigen::MatrixXd cov_qp;
  Eigen::MatrixXd cov_pp;
  /// Largest discarded imaginary part of an off-diagonal <q_l p_m>.
  double max_imag_residue = 0.0;

  int dims() const noexcept { return static_cast<int>(mean_q.size()); }
  double var_q(int l) const { return cov_qq(l, l); }
  double var_p(int l) const { return cov_pp(l, l); }
  double corr_qq(int l, int m) const { return cov_qq(l, m); }
  double corr_qp(int l, int m) const { return cov_qp(l, m); }
  double corr_pp(int l, int m) const { return cov_pp(l, m); }
};

/// amplitude ~ exp[-(x^T Sigma^-1 x)/4 + i (x^T Theta x)/2 + i p0.x],
/// x = q - mean_q, so |phi|^2 has covariance Sigma.
/// Throws InvalidCovariance for a non positive-definite Sigma and
/// GridCoverage when the grid does not hold 6 standard deviations in
/// position or momentum.
PointerWavefunction gaussian_pointer(const Grid& grid,
                                     const Eigen::MatrixXd& sigma,
                                     const Eigen::VectorXd& mean_q,
                                     const Eigen::VectorXd& mean_p,
                                     const Eigen::MatrixXd& theta);

/// Convenience overload with zero means and Theta = 0.
PointerWavefunction gaussian_pointer(const Grid& grid,
                                     const Eigen::MatrixXd& sigma);

/// Laguerre-Gauss mode (x + i sgn(l) y)^|l| exp(-(x^2+y^2) / (4 sigma^2)).
PointerWavefunction lg_mode(const Grid& grid, int l, double sigma);

/// Half-width a square LG grid needs to satisfy lg_mode's coverage check.
double lg_default_extent(int l, double sigma);

MomentSet moments(const PointerWavefunction& phi);

/// Multiplies by exp(i sum_j l_j q_j): translates the momentum distribution.
PointerWavefunction displace_momentum(const PointerWavefunction& phi,
                                      const std::vector<double>& shifts);

PointerWavefunction to_momentum(const PointerWavefunction& phi);
PointerWavefunction to_position(const PointerWavefunction& phi);

/// Applies (p_m - center) to a position-representation array through the
/// momentum representation of axis m.
std::vector<std::complex<double>> apply_momentum(
    const Grid& grid, const std::vector<std::complex<double>>& position_amps,
    int axis, double center = 0.0);

}  // namespace wmcorr
