#include "wmcorr/fourier_corr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wmcorr/errors.hpp"
#include "wmcorr/fft.hpp"
#include "wmcorr/kernels.hpp"

namespace wmcorr {

namespace {

using cplx = std::complex<double>;

void validate_precision(double s1, double s2, double c12) {
  if (!(s1 > 0.0) || !(s2 > 0.0) || !(s1 * s1 * s2 * s2 - c12 * c12 > 0.0)) {
    throw InvalidParams("exponent is not positive definite: need s1, s2 > 0 and "
                        "s1^2 s2^2 > c12^2");
  }
}

}  // namespace

DensityGrid density_from_wavefunction(const PointerWavefunction& phi_in) {
  if (phi_in.dims() != 2) throw DimensionError("density needs a 2-axis pointer");
  const PointerWavefunction phi = to_position(phi_in);
  DensityGrid f{phi.grid(), std::vector<double>(phi.grid().size())};
  double mass = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    f.values[i] = std::norm(phi.amplitudes()[i]);
    mass += f.values[i];
  }
  mass *= f.grid.cell_volume();
  for (double& v : f.values) v /= mass;
  return f;
}

DensityGrid correlated_density(const Grid& grid, double s1, double s2, double c12) {
  if (grid.dims() != 2) throw DimensionError("correlated_density needs a 2-axis grid");
  validate_precision(s1, s2, c12);
  DensityGrid f{grid, std::vector<double>(grid.size())};
  double mass = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.q(0, grid.index_along(i, 0));
    const double y = grid.q(1, grid.index_along(i, 1));
    f.values[i] = std::exp(-0.5 * s1 * s1 * x * x - 0.5 * s2 * s2 * y * y - c12 * x * y);
    mass += f.values[i];
  }
  mass *= grid.cell_volume();
  for (double& v : f.values) v /= mass;
  return f;
}

PartialTransform partial_fourier(const DensityGrid& f, int axis) {
  if (axis < 0 || axis >= f.grid.dims()) throw DimensionError("transform axis out of range");
  std::vector<cplx> v(f.values.begin(), f.values.end());
  fft::to_momentum(f.grid, v, axis);
  kernels::scale(v, cplx(std::sqrt(2.0 * std::numbers::pi)));
  return PartialTransform{f.grid, axis, std::move(v)};
}

std::vector<cplx> correlated_density_transform(const Grid& grid, double s1, double s2,
                                               double c12) {
  validate_precision(s1, s2, c12);
  const double a1 = s1 * s1;
  const double det = a1 * s2 * s2 - c12 * c12;
  const double prefactor =
      std::sqrt(det) / (2.0 * std::numbers::pi) * std::sqrt(2.0 * std::numbers::pi) / s1;
  std::vector<cplx> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p = grid.p(0, grid.index_along(i, 0));
    const double y = grid.q(1, grid.index_along(i, 1));
    const double re = -0.5 * (s2 * s2 - c12 * c12 / a1) * y * y - p * p / (2.0 * a1);
    out[i] = std::polar(prefactor * std::exp(re), c12 / a1 * p * y);
  }
  return out;
}

cplx formal_pq_correlation(const PartialTransform& f) {
  const Grid& g = f.grid;
  const int other = f.axis == 0 ? 1 : 0;
  cplx z{}, mp{}, mq{}, mpq{};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double p = g.p(f.axis, g.index_along(i, f.axis));
    const double q = g.q(other, g.index_along(i, other));
    const cplx w = f.values[i];
    z += w;
    mp += p * w;
    mq += q * w;
    mpq += p * q * w;
  }
  return mpq / z - (mp / z) * (mq / z);
}

AppendixACheck appendix_a_check(double s1, double s2, double c12) {
  validate_precision(s1, s2, c12);
  // Position covariance is P^-1; size the grid to 10 of its widest std.
  const double det = s1 * s1 * s2 * s2 - c12 * c12;
  const double widest = std::sqrt(std::max(s2 * s2, s1 * s1) / det);
  const double extent = std::max(8.0, 10.0 * widest);
  const Grid grid = Grid::uniform(2, 256, extent);
  const PartialTransform f = partial_fourier(correlated_density(grid, s1, s2, c12), 0);

  AppendixACheck out;
  out.numeric = formal_pq_correlation(f);
  out.analytic = cplx(0.0, c12 / (s1 * s1));
  out.residual = std::abs(out.numeric - out.analytic);
  out.corrected = cplx(0.0, c12 / (s2 * s2));
  out.corrected_residual = std::abs(out.numeric - out.corrected);
  return out;
}

}  // namespace wmcorr
