#pragma once

// Partial Fourier transform of a correlated two-axis position density and
// the formal p1-q2 "correlation" of the transformed (complex) array.

#include <complex>
#include <vector>

#include "wmcorr/grid.hpp"
#include "wmcorr/pointer_state.hpp"

namespace wmcorr {

struct DensityGrid {
  Grid grid;
  std::vector<double> values;  // nonnegative, sum * cell volume = 1
};

/// |phi|^2 renormalized to unit mass. Needs a 2-axis pointer.
DensityGrid density_from_wavefunction(const PointerWavefunction& phi);

/// exp(-s1^2 q1^2 / 2 - s2^2 q2^2 / 2 - c12 q1 q2) on `grid`, unit mass.
/// s1^2, s2^2 and c12 are precision-matrix entries.
DensityGrid correlated_density(const Grid& grid, double s1, double s2, double c12);

/// F(p, q_other) = integral exp(-i p q_axis) f dq_axis. Along `axis` the
/// index runs over the grid's momentum samples.
struct PartialTransform {
  Grid grid;
  int axis;
  std::vector<std::complex<double>> values;
};

PartialTransform partial_fourier(const DensityGrid& f, int axis);

/// Closed form of partial_fourier(correlated_density(...), 0) at every grid
/// point:
///   sqrt(det P)/(2 pi) * sqrt(2 pi)/s1 *
///   exp[-(s2^2 - c^2/s1^2) q2^2/2 - p^2/(2 s1^2) + i (c/s1^2) p q2].
std::vector<std::complex<double>> correlated_density_transform(const Grid& grid, double s1,
                                                               double s2, double c12);

/// Formal moment functional <p q> - <p><q> of a transformed array, each
/// moment divided by the array's total weight. Along `axis` the variable is
/// p, along the other axis q.
std::complex<double> formal_pq_correlation(const PartialTransform& f);

struct AppendixACheck {
  std::complex<double> numeric;
  std::complex<double> analytic;   // i c12 / s1^2
  double residual;                 // |numeric - analytic|
  std::complex<double> corrected;  // i c12 / s2^2
  double corrected_residual;       // |numeric - corrected|
};

/// Transforms the correlated density over q1 and compares the formal p1-q2
/// correlation with i c12 / s1^2. Throws InvalidParams unless
/// s1, s2 > 0 and s1^2 s2^2 > c12^2.
AppendixACheck appendix_a_check(double s1, double s2, double c12);

}  // namespace wmcorr
