#include <gtest/gtest.h>

#include "wmcorr/entanglement.hpp"
#include "wmcorr/scenario.hpp"

using namespace wmcorr;

TEST(TwoModeGaussian, ClosedFormCrossCovariance) {
  // alpha = beta = 1/4, gamma = 1/8: cov_qq = (4M)^-1 gives <q1 q2> = -2/3,
  // cov_pp = M gives <p1 p2> = 1/8; det C = -1/12.
  const TwoModeGaussianParams p{0.25, 0.25, 0.125};
  const PointerWavefunction phi = two_mode_gaussian(Grid::uniform(2, 128, 12.0), p);
  const CrossCovariance c = c_matrix_direct(phi);
  EXPECT_NEAR(c.entries(0, 0), -2.0 / 3.0, 1e-9);
  EXPECT_NEAR(c.entries(1, 1), 0.125, 1e-9);
  EXPECT_NEAR(c.entries(0, 1), 0.0, 1e-9);
  EXPECT_NEAR(c.entries(1, 0), 0.0, 1e-9);
  EXPECT_NEAR(c.det(), -1.0 / 12.0, 1e-9);
  EXPECT_TRUE(is_entangled(c));
  const Eigen::Matrix2d cov = two_mode_position_covariance(p);
  EXPECT_NEAR(cov(0, 1), -2.0 / 3.0, 1e-15);
  EXPECT_NEAR(cov(0, 0), 4.0 / 3.0, 1e-15);
}

TEST(TwoModeGaussian, ProductStateNotFlagged) {
  const PointerWavefunction phi = two_mode_gaussian(Grid::uniform(2, 128, 10.0), {0.25, 0.5, 0.0});
  const CrossCovariance c = c_matrix_direct(phi);
  EXPECT_LT(std::abs(c.det()), kDetTolerance);
  EXPECT_FALSE(is_entangled(c));
}

TEST(TwoModeGaussian, InvalidParams) {
  const Grid g = Grid::uniform(2, 64, 10.0);
  EXPECT_THROW(two_mode_gaussian(g, {0.25, 0.25, 0.3}), InvalidParams);
  EXPECT_THROW(two_mode_gaussian(g, {-0.25, 0.25, 0.0}), InvalidParams);
}

TEST(CMatrix, LgModeIsNotFlagged) {
  // C = [[0, 1/2], [-1/2, 0]] for l = 1, det = +1/4.
  const PointerWavefunction phi = lg_mode(Grid::uniform(2, 256, lg_default_extent(1, 1.0)), 1, 1.0);
  const CrossCovariance c = c_matrix_direct(phi);
  EXPECT_NEAR(c.entries(0, 1), 0.5, 1e-9);
  EXPECT_NEAR(c.entries(1, 0), -0.5, 1e-9);
  EXPECT_NEAR(c.det(), 0.25, 1e-9);
  EXPECT_FALSE(is_entangled(c));
}

TEST(CMatrixFromShifts, MatchesDirectBothVariants) {
  const PointerWavefunction phi = two_mode_gaussian(Grid::uniform(2, 128, 12.0), {0.25, 0.25, 0.125});
  const CrossCovariance direct = c_matrix_direct(phi);
  for (bool strong : {false, true}) {
    WeakProbeConfig probe = default_probe(0.02);
    probe.strong_readout = strong;
    const CrossCovariance c = c_matrix_from_shifts(phi, probe);
    EXPECT_NEAR(c.entries(0, 0), direct.entries(0, 0), 0.01 * std::abs(direct.entries(0, 0)));
    EXPECT_NEAR(c.entries(1, 1), direct.entries(1, 1), 0.01 * std::abs(direct.entries(1, 1)));
    EXPECT_TRUE(is_entangled(c));
  }
}

TEST(CMatrixFromShifts, ErrorShrinksWithStrength) {
  const PointerWavefunction phi = two_mode_gaussian(Grid::uniform(2, 128, 12.0), {0.25, 0.25, 0.1});
  const CrossCovariance direct = c_matrix_direct(phi);
  std::vector<double> lambdas{0.1, 0.05, 0.025}, errors;
  for (double l : lambdas) {
    errors.push_back((c_matrix_from_shifts(phi, default_probe(l)).entries - direct.entries)
                         .cwiseAbs()
                         .maxCoeff());
  }
  EXPECT_GE(loglog_slope(lambdas, errors), 0.7);
}

TEST(CMatrixFromShifts, RealWeakValueRejected) {
  const PointerWavefunction phi = two_mode_gaussian(Grid::uniform(2, 64, 10.0), {0.25, 0.25, 0.1});
  WeakProbeConfig probe = default_probe();
  probe.observable = Observable::pauli_x();
  probe.pre = make_state({1.0, 1.5});
  probe.post = make_state({1.0, 0.0});
  EXPECT_THROW(c_matrix_from_shifts(phi, probe), UnusableProbe);
  EXPECT_THROW(c_matrix_from_shifts(gaussian_pointer(Grid::uniform(1, 64, 8.0), Eigen::MatrixXd::Identity(1, 1)),
                                    default_probe()),
               DimensionError);
}
