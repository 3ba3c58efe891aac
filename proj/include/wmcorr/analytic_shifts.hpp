#pragma once

// First-order predictions of postselected pointer shifts in terms of weak
// values and initial-pointer moments. Time-derivative-of-variance terms are
// identically zero here: the pointer has no free evolution.

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "wmcorr/dynamics.hpp"
#include "wmcorr/pointer_state.hpp"

namespace wmcorr {

struct ShiftPrediction {
  Eigen::VectorXd delta_q;
  Eigen::VectorXd delta_p;
  /// Set when delta_p of the readout axis contains the eigenvalue offset.
  bool includes_readout_offset = false;
};

/// Orientation of each term family relative to the +1 form
///   dq_t = 2 lambda Im(A)_w cov(q_t, xi),  dp_t = 2 lambda Im(A)_w cov(p_t, xi),
///   dp_j = lambda Re(A)_w for a q_j coupling,  dp_r = a_r for the readout.
struct SignConvention {
  int im_q = 1;     // s
  int im_p = 1;     // s'
  int re = 1;       // r
  int readout = 1;

  /// Values established against the exact oracle for exp(-i lambda A xi).
  static constexpr SignConvention frozen() { return {1, 1, -1, -1}; }

  bool operator==(const SignConvention&) const = default;
};

/// One weak coupling as seen by the predictor.
struct WeakTerm {
  int axis;
  Quadrature quadrature;
  double strength;
  std::complex<double> weak_value;
};

/// General first-order shifts for any set of couplings on any axes.
ShiftPrediction predict_general(const MomentSet& m, const std::vector<WeakTerm>& terms,
                                std::optional<ReadoutShift> readout,
                                const SignConvention& conv);

/// Two weak couplings to q1 and q2, strong readout of eigenvalue a3l on q3.
ShiftPrediction predict_sequential(const MomentSet& m, double lambda1, double lambda2,
                                   std::complex<double> a1w, std::complex<double> a2w,
                                   double a3l, const SignConvention& conv);

/// One weak coupling to q1, readout (offset a2l, 0 for direct projection) on axis 2.
ShiftPrediction predict_single(const MomentSet& m, double lambda, std::complex<double> aw,
                               double a2l, const SignConvention& conv);

/// Position shifts for g (A p_x + B p_y) on an LG pointer of charge l.
/// delta_p is left empty.
ShiftPrediction predict_lg(int l, double g, std::complex<double> aw,
                           std::complex<double> bw, const SignConvention& conv);

/// max(|corr(x,p_y) - l/2|, |corr(y,p_x) + l/2|, |corr(x,y)|): distance from
/// the cross-correlations required by the LG position-shift relations.
double lg_compatibility(const MomentSet& m, int l);

/// max(|corr(p_x,y) - l/2|, |corr(p_y,x) - l/2|, |corr(x,y)|), the
/// equal-sign reading of the same law. Nonzero for l != 0; diagnostic only.
double lg_equal_sign_residual(const MomentSet& m, int l);

/// Runs the calibration experiments through the exact oracle and returns the
/// sign of each term family.
SignConvention calibrate_convention();

}  // namespace wmcorr
