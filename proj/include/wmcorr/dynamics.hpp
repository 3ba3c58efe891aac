#pragma once

// Joint system (x) pointer states and von Neumann couplings
// exp(-i lambda A (x) xi), xi a position or momentum quadrature of one
// pointer axis.

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "wmcorr/pointer_state.hpp"
#include "wmcorr/quantum_core.hpp"

namespace wmcorr {

enum class Quadrature { q, p };
enum class CouplingMode { exact, first_order };

const char* to_string(Quadrature q);

struct CouplingSpec {
  Observable observable;
  int axis = 0;
  Quadrature quadrature = Quadrature::q;
  double strength = 0.0;
  CouplingMode mode = CouplingMode::exact;
};

/// Amplitudes are component-major: amps[c * grid.size() + i]. Always held
/// in the position representation.
class JointState {
 public:
  JointState(Grid grid, int system_dim, std::vector<std::complex<double>> amps,
             bool truncated = false);

  const Grid& grid() const noexcept { return grid_; }
  int system_dimension() const noexcept { return d_; }
  const std::vector<std::complex<double>>& amplitudes() const noexcept {
    return amps_;
  }
  /// True once a first-order (truncated) coupling has been applied.
  bool truncated() const noexcept { return truncated_; }

  double norm_sq() const;
  /// Diagonal of the reduced system density matrix.
  std::vector<double> system_populations() const;

 private:
  Grid grid_;
  int d_;
  std::vector<std::complex<double>> amps_;
  bool truncated_;
};

JointState make_joint(const SystemState& s, const PointerWavefunction& phi);

/// Applies exp(-i sum_k lambda_k A_k (x) xi_k) (exact mode) or its first-order
/// truncation followed by renormalization. All specs must share one
/// quadrature (RepresentationError otherwise) and one mode.
JointState apply_couplings(const JointState& state,
                           const std::vector<CouplingSpec>& specs);

/// Unit-strength exact coupling of A3 to the position quadrature of `axis`.
JointState strong_readout(const JointState& state, const Observable& a3, int axis);

struct Postselected {
  PointerWavefunction pointer;
  double probability;
};

/// Projects the system onto `target`; the pointer is renormalized.
/// Throws PostselectionFailed when the probability is below 1e-12.
Postselected postselect(const JointState& state, const SystemState& target);

inline constexpr double kMinPostselectionProbability = 1e-12;

/// Strong-readout outcome applied as exp(-i eigenvalue * q_axis).
struct ReadoutShift {
  int axis;
  double eigenvalue;
};

/// Postselected pointer built from weak values alone:
/// exp(-i a q_r) (1 - i sum_k lambda_k (A_k)_w xi_k) phi, renormalized.
PointerWavefunction first_order_pointer(const SystemState& pre,
                                        const SystemState& post,
                                        const std::vector<CouplingSpec>& specs,
                                        const PointerWavefunction& phi,
                                        std::optional<ReadoutShift> readout = std::nullopt);

}  // namespace wmcorr
