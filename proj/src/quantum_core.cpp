#include "wmcorr/quantum_core.hpp"

#include <cmath>
#include <string>

namespace wmcorr {

namespace {

void require_same_dimension(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimensions " +
                         std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

SystemState make_state(const CVector& amplitudes) {
  if (amplitudes.size() < 2) {
    throw InvalidState("system dimension must be >= 2");
  }
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvalidState("amplitude vector is zero or not finite");
  }
  return SystemState(amplitudes / n);
}

SystemState make_state(std::initializer_list<cplx> amplitudes) {
  CVector v(static_cast<Eigen::Index>(amplitudes.size()));
  Eigen::Index i = 0;
  for (cplx a : amplitudes) v[i++] = a;
  return make_state(v);
}

Observable::Observable(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw InvalidObservable("matrix must be square and non-empty");
  }
  const double asym = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= 1e-12)) {
    throw InvalidObservable("matrix is not Hermitian (max |M - M^dagger| = " +
                            std::to_string(asym) + ")");
  }
}

bool Observable::is_diagonal() const noexcept {
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = 0; j < m_.cols(); ++j)
      if (i != j && m_(i, j) != cplx{}) return false;
  return true;
}

Observable Observable::pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return Observable(m);
}

Observable Observable::pauli_y() {
  CMatrix m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return Observable(m);
}

Observable Observable::pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return Observable(m);
}

Observable Observable::identity(int d) {
  return Observable(CMatrix::Identity(d, d));
}

Observable Observable::zero(int d) { return Observable(CMatrix::Zero(d, d)); }

Observable Observable::basis_projector(int d, int k) {
  if (k < 0 || k >= d) throw DimensionError("projector index out of range");
  CMatrix m = CMatrix::Zero(d, d);
  m(k, k) = 1.0;
  return Observable(m);
}

SystemState Spectrum::eigenstate(int k) const {
  if (k < 0 || k >= eigenvectors.cols()) {
    throw DimensionError("eigenstate index " + std::to_string(k) +
                         " out of range");
  }
  return make_state(CVector(eigenvectors.col(k)));
}

Spectrum eigendecompose(const Observable& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw InvalidObservable("eigendecomposition did not converge");
  }
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

cplx weak_value(const Observable& a, const SystemState& pre,
                const SystemState& post) {
  require_same_dimension(a.dimension(), pre.dimension(), "weak_value(pre)");
  require_same_dimension(a.dimension(), post.dimension(), "weak_value(post)");
  const cplx overlap = post.amplitudes().dot(pre.amplitudes());
  if (!(std::abs(overlap) > kOverlapFloor)) {
    throw NearOrthogonalPostselection(std::abs(overlap));
  }
  const cplx numerator = post.amplitudes().dot(a.matrix() * pre.amplitudes());
  return numerator / overlap;
}

double expectation(const Observable& a, const SystemState& s) {
  require_same_dimension(a.dimension(), s.dimension(), "expectation");
  return s.amplitudes().dot(a.matrix() * s.amplitudes()).real();
}

}  // namespace wmcorr
