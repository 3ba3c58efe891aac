#include <numbers>

#include <gtest/gtest.h>

#include "wmcorr/fourier_corr.hpp"

using namespace wmcorr;

TEST(PartialFourier, MatchesClosedForm) {
  const Grid g = Grid::uniform(2, 128, 10.0);
  for (auto [s1, s2, c] : {std::tuple{1.0, 1.0, 0.2}, {1.25, 0.9, -0.3}}) {
    const PartialTransform f = partial_fourier(correlated_density(g, s1, s2, c), 0);
    const auto ref = correlated_density_transform(g, s1, s2, c);
    double worst = 0;
    for (std::size_t i = 0; i < ref.size(); ++i) worst = std::max(worst, std::abs(f.values[i] - ref[i]));
    EXPECT_LT(worst, 1e-10);
  }
}

TEST(PartialFourier, ZeroMomentumIsMarginal) {
  // F(0, q2) = integral f dq1 = marginal density of q2.
  const Grid g = Grid::uniform(2, 64, 8.0);
  const DensityGrid d = correlated_density(g, 1.0, 1.2, 0.3);
  const PartialTransform f = partial_fourier(d, 0);
  const std::size_t j0 = 32;  // p = 0
  for (std::size_t k = 0; k < 64; ++k) {
    double marginal = 0;
    for (std::size_t i = 0; i < 64; ++i) marginal += d.values[i * 64 + k] * g.dq(0);
    EXPECT_NEAR(f.values[j0 * 64 + k].real(), marginal, 1e-12);
    EXPECT_NEAR(f.values[j0 * 64 + k].imag(), 0.0, 1e-12);
  }
}

TEST(FormalCorrelation, EqualWidths) {
  const AppendixACheck chk = appendix_a_check(1.0, 1.0, 0.2);
  EXPECT_NEAR(chk.numeric.real(), 0.0, 1e-9);
  EXPECT_NEAR(chk.numeric.imag(), 0.2, 1e-9);
  EXPECT_LT(chk.residual, 1e-6);
}

TEST(FormalCorrelation, UnequalWidthsFollowSecondAxis) {
  // Measured: i c / s2^2. The i c / s1^2 reading holds only for s1 = s2.
  const AppendixACheck chk = appendix_a_check(1.25, 1.0, 0.2);
  EXPECT_LT(chk.corrected_residual, 1e-9);
  EXPECT_NEAR(chk.residual, 0.2 * (1.0 - 1.0 / (1.25 * 1.25)), 1e-9);
  const AppendixACheck other = appendix_a_check(1.0, 0.8, 0.1);
  EXPECT_NEAR(other.numeric.imag(), 0.1 / 0.64, 1e-9);
}

TEST(FormalCorrelation, InvalidParams) {
  EXPECT_THROW(appendix_a_check(1.0, 1.0, 1.5), InvalidParams);
  EXPECT_THROW(appendix_a_check(-1.0, 1.0, 0.1), InvalidParams);
}

TEST(DensityFromWavefunction, UnitMass) {
  Eigen::MatrixXd sigma(2, 2);
  sigma << 1.0, 0.4, 0.4, 1.0;
  const DensityGrid d = density_from_wavefunction(gaussian_pointer(Grid::uniform(2, 64, 8.0), sigma));
  double mass = 0;
  for (double v : d.values) mass += v;
  EXPECT_NEAR(mass * d.grid.cell_volume(), 1.0, 1e-12);
}
