#include "wmcorr/dynamics.hpp"

#include <cmath>
#include <span>
#include <string>

#include "wmcorr/fft.hpp"
#include "wmcorr/kernels.hpp"

namespace wmcorr {

namespace {

using cplx = std::complex<double>;

void validate_spec(const CouplingSpec& s, const Grid& grid, int d) {
  if (s.axis < 0 || s.axis >= grid.dims()) {
    throw DimensionError("coupling axis " + std::to_string(s.axis) + " out of range");
  }
  if (!std::isfinite(s.strength)) throw InvalidParams("coupling strength not finite");
  if (s.observable.dimension() != d) {
    throw DimensionError("coupling observable dimension " +
                         std::to_string(s.observable.dimension()) +
                         " does not match system dimension " + std::to_string(d));
  }
}

std::span<cplx> component(std::vector<cplx>& amps, std::size_t n, int c) {
  return std::span<cplx>(amps).subspan(static_cast<std::size_t>(c) * n, n);
}

}  // namespace

const char* to_string(Quadrature q) { return q == Quadrature::q ? "q" : "p"; }

JointState::JointState(Grid grid, int system_dim, std::vector<cplx> amps, bool truncated)
    : grid_(std::move(grid)), d_(system_dim), amps_(std::move(amps)), truncated_(truncated) {
  if (amps_.size() != grid_.size() * static_cast<std::size_t>(d_)) {
    throw DimensionError("joint amplitude count does not match d * grid size");
  }
}

double JointState::norm_sq() const {
  return kernels::norm_sq(amps_) * grid_.cell_volume();
}

std::vector<double> JointState::system_populations() const {
  const std::size_t n = grid_.size();
  std::vector<double> out(d_);
  for (int c = 0; c < d_; ++c) {
    out[c] = kernels::norm_sq(std::span<const cplx>(amps_).subspan(c * n, n)) *
             grid_.cell_volume();
  }
  return out;
}

JointState make_joint(const SystemState& s, const PointerWavefunction& phi_in) {
  const PointerWavefunction phi = to_position(phi_in);
  const std::size_t n = phi.grid().size();
  const int d = s.dimension();
  std::vector<cplx> amps(n * d);
  for (int c = 0; c < d; ++c) {
    auto dst = component(amps, n, c);
    std::copy(phi.amplitudes().begin(), phi.amplitudes().end(), dst.begin());
    kernels::scale(dst, s[c]);
  }
  return JointState(phi.grid(), d, std::move(amps));
}

JointState apply_couplings(const JointState& state, const std::vector<CouplingSpec>& specs) {
  if (specs.empty()) return state;
  const Grid& grid = state.grid();
  const int d = state.system_dimension();
  const Quadrature quad = specs.front().quadrature;
  const CouplingMode mode = specs.front().mode;
  for (const auto& s : specs) {
    validate_spec(s, grid, d);
    if (s.quadrature != quad) {
      throw RepresentationError("couplings in one application must share a quadrature");
    }
    if (s.mode != mode) {
      throw InvalidParams("couplings in one application must share a mode");
    }
  }

  const std::size_t n = grid.size();
  std::vector<cplx> amps = state.amplitudes();
  if (quad == Quadrature::p) {
    for (int c = 0; c < d; ++c) fft::to_momentum(grid, component(amps, n, c));
  }

  std::vector<std::vector<double>> fields;
  fields.reserve(specs.size());
  for (const auto& s : specs) {
    fields.push_back(quad == Quadrature::q ? grid.position_field(s.axis)
                                           : grid.momentum_field(s.axis));
  }

  if (mode == CouplingMode::exact && specs.size() == 1) {
    const Observable& a = specs.front().observable;
    if (a.is_diagonal()) {
      const Eigen::VectorXd ev = a.matrix().diagonal().real();
      kernels::diagonal_coupling(amps, n, std::span<const double>(ev.data(), ev.size()),
                                 fields.front(), specs.front().strength);
    } else {
      const Spectrum sp = eigendecompose(a);
      kernels::rotate_components(amps, n, sp.eigenvectors.adjoint());
      kernels::diagonal_coupling(
          amps, n, std::span<const double>(sp.eigenvalues.data(), sp.eigenvalues.size()),
          fields.front(), specs.front().strength);
      kernels::rotate_components(amps, n, sp.eigenvectors);
    }
  } else {
    std::vector<kernels::GeneratorTerm> terms;
    for (std::size_t k = 0; k < specs.size(); ++k) {
      terms.push_back({&specs[k].observable.matrix(), fields[k], specs[k].strength});
    }
    if (mode == CouplingMode::exact) {
      kernels::generator_exponential(amps, n, terms);
    } else {
      kernels::first_order_generator(amps, n, terms);
    }
  }

  if (quad == Quadrature::p) {
    for (int c = 0; c < d; ++c) fft::to_position(grid, component(amps, n, c));
  }

  bool truncated = state.truncated();
  if (mode == CouplingMode::first_order) {
    truncated = true;
    const double norm = kernels::norm_sq(amps) * grid.cell_volume();
    kernels::scale(amps, cplx(1.0 / std::sqrt(norm)));
  }
  return JointState(grid, d, std::move(amps), truncated);
}

JointState strong_readout(const JointState& state, const Observable& a3, int axis) {
  return apply_couplings(state, {CouplingSpec{a3, axis, Quadrature::q, 1.0, CouplingMode::exact}});
}

Postselected postselect(const JointState& state, const SystemState& target) {
  if (target.dimension() != state.system_dimension()) {
    throw DimensionError("postselection target dimension mismatch");
  }
  const Grid& grid = state.grid();
  std::vector<cplx> out(grid.size());
  kernels::contract(state.amplitudes(), grid.size(), target.amplitudes(), out);
  const double prob = kernels::norm_sq(out) * grid.cell_volume();
  if (!(prob >= kMinPostselectionProbability)) {
    throw PostselectionFailed("postselection probability " + std::to_string(prob));
  }
  kernels::scale(out, cplx(1.0 / std::sqrt(prob)));
  return {PointerWavefunction(grid, std::move(out)), prob};
}

PointerWavefunction first_order_pointer(const SystemState& pre, const SystemState& post,
                                        const std::vector<CouplingSpec>& specs,
                                        const PointerWavefunction& phi_in,
                                        std::optional<ReadoutShift> readout) {
  const PointerWavefunction phi = to_position(phi_in);
  const Grid& grid = phi.grid();
  std::vector<cplx> out = phi.amplitudes();
  for (const auto& s : specs) {
    validate_spec(s, grid, pre.dimension());
    const cplx coeff = cplx(0.0, -s.strength) * weak_value(s.observable, pre, post);
    std::vector<cplx> term;
    if (s.quadrature == Quadrature::q) {
      term = phi.amplitudes();
      kernels::multiply(term, grid.position_field(s.axis));
    } else {
      term = apply_momentum(grid, phi.amplitudes(), s.axis);
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeff * term[i];
  }
  if (readout) {
    if (readout->axis < 0 || readout->axis >= grid.dims()) {
      throw DimensionError("readout axis out of range");
    }
    kernels::phase(out, grid.position_field(readout->axis), -readout->eigenvalue);
  }
  return PointerWavefunction(grid, std::move(out)).normalized();
}

}  // namespace wmcorr
