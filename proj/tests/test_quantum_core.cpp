#include <gtest/gtest.h>

#include "wmcorr/quantum_core.hpp"

using namespace wmcorr;

TEST(SystemState, NormalizesAmplitudes) {
  const SystemState s = make_state({3.0, cplx(0.0, 4.0)});
  EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-15);
  EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
  EXPECT_NEAR(s[1].imag(), 0.8, 1e-15);
}

TEST(SystemState, RejectsZeroAndScalar) {
  EXPECT_THROW(make_state({0.0, 0.0}), InvalidState);
  EXPECT_THROW(make_state(CVector::Ones(1)), InvalidState);
}

TEST(Observable, RejectsNonHermitian) {
  CMatrix m(2, 2);
  m << 0, 1, 0, 0;
  EXPECT_THROW(Observable{m}, InvalidObservable);
  EXPECT_THROW(Observable{CMatrix::Zero(2, 3)}, InvalidObservable);
  EXPECT_TRUE(Observable::pauli_z().is_diagonal());
  EXPECT_FALSE(Observable::pauli_x().is_diagonal());
}

TEST(Spectrum, AscendingAndOrthonormal) {
  const Spectrum sp = eigendecompose(Observable::pauli_y());
  EXPECT_NEAR(sp.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(sp.eigenvalues[1], 1.0, 1e-14);
  const CMatrix gram = sp.eigenvectors.adjoint() * sp.eigenvectors;
  EXPECT_LT((gram - CMatrix::Identity(2, 2)).norm(), 1e-14);
  const SystemState up = sp.eigenstate(1);
  EXPECT_NEAR(expectation(Observable::pauli_y(), up), 1.0, 1e-14);
}

TEST(WeakValue, HandComputedCases) {
  // sigma_y between (|0>+|1>)/sqrt2 and |1>: <1|sigma_y|pre> = i/sqrt2.
  const cplx w = weak_value(Observable::pauli_y(), make_state({1.0, 1.0}), make_state({0.0, 1.0}));
  EXPECT_NEAR(w.real(), 0.0, 1e-14);
  EXPECT_NEAR(w.imag(), 1.0, 1e-14);
  // sigma_x between (1, 1.5) and |0>: tan-like anomalous value 1.5.
  const cplx r = weak_value(Observable::pauli_x(), make_state({1.0, 1.5}), make_state({1.0, 0.0}));
  EXPECT_NEAR(r.real(), 1.5, 1e-14);
  EXPECT_NEAR(r.imag(), 0.0, 1e-14);
}

TEST(WeakValue, ExpectationWhenPostEqualsPre) {
  const SystemState s = make_state({cplx(1, 2), cplx(-0.5, 0.3)});
  const cplx w = weak_value(Observable::pauli_x(), s, s);
  EXPECT_NEAR(w.real(), expectation(Observable::pauli_x(), s), 1e-14);
  EXPECT_NEAR(w.imag(), 0.0, 1e-14);
}

TEST(WeakValue, NearOrthogonalRefused) {
  try {
    weak_value(Observable::pauli_x(), make_state({1.0, 0.0}), make_state({1e-10, 1.0}));
    FAIL() << "expected NearOrthogonalPostselection";
  } catch (const NearOrthogonalPostselection& e) {
    EXPECT_LT(e.overlap(), kOverlapFloor);
  }
}

TEST(Expectation, DimensionMismatch) {
  EXPECT_THROW(expectation(Observable::identity(3), make_state({1.0, 0.0})), DimensionError);
}
