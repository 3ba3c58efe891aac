#include <gtest/gtest.h>

#include "wmcorr/pointer_state.hpp"

using namespace wmcorr;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST(GaussianPointer, ClosedFormMoments2D) {
  // |phi|^2 has covariance Sigma; the phase gradient Theta x + p0 gives
  // cov(q, p) = Sigma Theta and cov(p, p) = Sigma^-1 / 4 + Theta Sigma Theta.
  MatrixXd sigma(2, 2), theta(2, 2);
  sigma << 1.0, 0.5, 0.5, 1.5;
  theta << -0.1, 0.3, 0.3, 0.2;
  VectorXd mq(2), mp(2);
  mq << 0.4, -0.3;
  mp << 0.2, 0.5;
  const Grid g = Grid::uniform(2, 128, 10.0);
  const MomentSet m = moments(gaussian_pointer(g, sigma, mq, mp, theta));
  EXPECT_LT((m.mean_q - mq).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((m.mean_p - mp).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((m.cov_qq - sigma).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((m.cov_qp - sigma * theta).cwiseAbs().maxCoeff(), 1e-10);
  const MatrixXd cpp = sigma.inverse() / 4.0 + theta * sigma * theta;
  EXPECT_LT((m.cov_pp - cpp).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(GaussianPointer, ThreeAxes) {
  MatrixXd sigma(3, 3);
  sigma << 1.0, 0.5, 0.3, 0.5, 1.0, 0.2, 0.3, 0.2, 1.0;
  const MomentSet m = moments(gaussian_pointer(Grid::uniform(3, 64, 8.0), sigma));
  EXPECT_LT((m.cov_qq - sigma).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT(m.cov_qp.cwiseAbs().maxCoeff(), 1e-10);
}

TEST(GaussianPointer, Preconditions) {
  MatrixXd bad(2, 2);
  bad << 1.0, 2.0, 2.0, 1.0;
  EXPECT_THROW(gaussian_pointer(Grid::uniform(2, 64, 8.0), bad), InvalidCovariance);
  MatrixXd one = MatrixXd::Identity(1, 1);
  EXPECT_THROW(gaussian_pointer(Grid::uniform(1, 32, 2.0), one), GridCoverage);   // position
  EXPECT_THROW(gaussian_pointer(Grid::uniform(1, 32, 40.0), one), GridCoverage);  // momentum
  EXPECT_THROW(gaussian_pointer(Grid::uniform(2, 64, 8.0), one), DimensionError);
}

TEST(LgMode, WaistAndAngularCorrelations) {
  for (int l : {-2, -1, 0, 1, 2}) {
    const Grid g = Grid::uniform(2, 256, lg_default_extent(l, 1.0));
    const MomentSet m = moments(lg_mode(g, l, 1.0));
    EXPECT_NEAR(m.var_q(0), 1.0 + std::abs(l), 1e-9) << l;
    EXPECT_NEAR(m.var_q(1), 1.0 + std::abs(l), 1e-9) << l;
    EXPECT_NEAR(m.corr_qp(0, 1), 0.5 * l, 1e-9) << l;   // corr(x, p_y)
    EXPECT_NEAR(m.corr_qp(1, 0), -0.5 * l, 1e-9) << l;  // corr(y, p_x)
    EXPECT_NEAR(m.corr_qq(0, 1), 0.0, 1e-12) << l;
  }
}

TEST(LgMode, Preconditions) {
  EXPECT_THROW(lg_mode(Grid::uniform(3, 32, 8.0), 1, 1.0), DimensionError);
  EXPECT_THROW(lg_mode(Grid::uniform(2, 64, 8.0), 1, -1.0), InvalidParams);
  EXPECT_THROW(lg_mode(Grid::uniform(2, 256, 7.0), 2, 1.0), GridCoverage);
}

TEST(Moments, RequiresNormalizedInput) {
  const Grid g = Grid::uniform(1, 64, 6.0);
  const PointerWavefunction phi = gaussian_pointer(g, MatrixXd::Identity(1, 1));
  std::vector<std::complex<double>> doubled = phi.amplitudes();
  for (auto& z : doubled) z *= 2.0;
  EXPECT_THROW(moments(PointerWavefunction(g, doubled)), NormalizationError);
  EXPECT_NO_THROW(moments(PointerWavefunction(g, doubled).normalized()));
}

TEST(Representation, RoundTripAndMomentumMoments) {
  MatrixXd sigma(2, 2);
  sigma << 1.0, 0.3, 0.3, 1.0;
  const PointerWavefunction phi = gaussian_pointer(Grid::uniform(2, 64, 8.0), sigma);
  const PointerWavefunction mom = to_momentum(phi);
  EXPECT_EQ(mom.representation(), Representation::momentum);
  EXPECT_NEAR(mom.norm_sq(), 1.0, 1e-12);
  const PointerWavefunction back = to_position(mom);
  for (std::size_t i = 0; i < back.amplitudes().size(); ++i) {
    ASSERT_LT(std::abs(back.amplitudes()[i] - phi.amplitudes()[i]), 1e-13);
  }
  // moments accepts either representation.
  const MomentSet a = moments(phi), b = moments(mom);
  EXPECT_LT((a.cov_pp - b.cov_pp).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((a.cov_qq - b.cov_qq).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(DisplaceMomentum, ShiftsMeanOnly) {
  const PointerWavefunction phi = lg_mode(Grid::uniform(2, 256, lg_default_extent(1, 1.0)), 1, 1.0);
  const MomentSet m0 = moments(phi);
  const double dp = phi.grid().dp(0);
  const MomentSet m = moments(displace_momentum(phi, {2 * dp, -dp}));
  EXPECT_NEAR(m.mean_p[0] - m0.mean_p[0], 2 * dp, 1e-12);
  EXPECT_NEAR(m.mean_p[1] - m0.mean_p[1], -dp, 1e-12);
  EXPECT_LT((m.cov_qp - m0.cov_qp).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((m.cov_pp - m0.cov_pp).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(displace_momentum(phi, {1.0}), DimensionError);
}
