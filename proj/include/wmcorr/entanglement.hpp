#pragma once

// Entanglement test for two-mode pointers through the 2x2 cross-covariance
// block C = [<q1 q2> <q1 p2>; <p1 q2> <p1 p2>] (centered): det(C) < 0 flags
// entanglement. C is obtained either directly from the wavefunction or from
// simulated weak-measurement shifts.

#include <complex>

#include <Eigen/Dense>

#include "wmcorr/analytic_shifts.hpp"
#include "wmcorr/pointer_state.hpp"
#include "wmcorr/quantum_core.hpp"

namespace wmcorr {

inline constexpr double kDetTolerance = 1e-6;
inline constexpr double kMinProbeImaginary = 1e-6;

struct CrossCovariance {
  Eigen::Matrix2d entries;
  double det() const { return entries.determinant(); }
};

struct TwoModeGaussianParams {
  double alpha;
  double beta;
  double gamma;
};

/// exp[-(alpha q1^2 + beta q2^2 + 2 gamma q1 q2)], normalized on the grid.
/// Throws InvalidParams unless alpha, beta > 0 and alpha*beta > gamma^2.
PointerWavefunction two_mode_gaussian(const Grid& grid, const TwoModeGaussianParams& params);

/// Closed-form position covariance of two_mode_gaussian: (4M)^-1 with
/// M = [[alpha, gamma], [gamma, beta]].
Eigen::Matrix2d two_mode_position_covariance(const TwoModeGaussianParams& params);

CrossCovariance c_matrix_direct(const PointerWavefunction& phi);

/// Weak probe used to read C off pointer shifts. The weak value of
/// `observable` between `pre` and `post` must have |Im| >= 1e-6.
struct WeakProbeConfig {
  SystemState pre;
  SystemState post;
  Observable observable;
  double strength = 0.05;
  /// Postselect through a strong readout on axis 1 (offset subtracted)
  /// instead of projecting the system directly.
  bool strong_readout = false;
  SignConvention convention = SignConvention::frozen();
};

/// Couples the probe to q1 and then to p1 (exact evolution), postselects,
/// and divides the <q2>, <p2> shifts by 2 lambda Im(A)_w.
CrossCovariance c_matrix_from_shifts(const PointerWavefunction& phi, const WeakProbeConfig& probe);

/// det(C) < -kDetTolerance.
bool is_entangled(const CrossCovariance& c);

/// Probe with Aw = i on a qubit: A = sigma_y, pre = (|0>+|1>)/sqrt2,
/// post = |1>, so the strong-readout variant can use A3 = |1><1|.
WeakProbeConfig default_probe(double strength = 0.05);

}  // namespace wmcorr
