#pragma once

// Finite-dimensional system side: pure states, Hermitian observables,
// spectra and weak values.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "wmcorr/errors.hpp"

namespace wmcorr {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Largest system dimension accepted by the scenario schema.
inline constexpr int kMaxSystemDimension = 16;

/// Weak values are refused when |<post|pre>| is at or below this.
inline constexpr double kOverlapFloor = 1e-8;

class SystemState {
 public:
  const CVector& amplitudes() const noexcept { return amps_; }
  int dimension() const noexcept { return static_cast<int>(amps_.size()); }
  cplx operator[](int i) const { return amps_[i]; }

 private:
  friend SystemState make_state(const CVector&);
  explicit SystemState(CVector v) : amps_(std::move(v)) {}
  CVector amps_;
};

/// Normalizes `amplitudes`. Throws InvalidState for a zero vector or d < 2.
SystemState make_state(const CVector& amplitudes);
SystemState make_state(std::initializer_list<cplx> amplitudes);

class Observable {
 public:
  /// Throws InvalidObservable unless `m` is square and Hermitian to 1e-12.
  explicit Observable(CMatrix m);

  const CMatrix& matrix() const noexcept { return m_; }
  int dimension() const noexcept { return static_cast<int>(m_.rows()); }
  bool is_diagonal() const noexcept;

  static Observable pauli_x();
  static Observable pauli_y();
  static Observable pauli_z();
  static Observable identity(int d);
  static Observable zero(int d);
  /// |k><k| in a d-dimensional space.
  static Observable basis_projector(int d, int k);

 private:
  CMatrix m_;
};

struct Spectrum {
  Eigen::VectorXd eigenvalues;  // ascending
  CMatrix eigenvectors;         // columns, orthonormal

  SystemState eigenstate(int k) const;
};

Spectrum eigendecompose(const Observable& a);

/// <post|A|pre> / <post|pre>.
cplx weak_value(const Observable& a, const SystemState& pre,
                const SystemState& post);

/// <s|A|s>; throws DimensionError on mismatched dimensions.
double expectation(const Observable& a, const SystemState& s);

}  // namespace wmcorr
