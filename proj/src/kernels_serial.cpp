#include <cmath>

#include "wmcorr/kernels.hpp"

namespace wmcorr::kernels::serial {

double norm_sq(std::span<const cplx> a) {
  double s = 0.0;
  for (const cplx& v : a) s += std::norm(v);
  return s;
}

double weighted_norm(std::span<const cplx> a, std::span<const double> f) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i]) * f[i];
  return s;
}

double weighted_norm2(std::span<const cplx> a, std::span<const double> f,
                      std::span<const double> g) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i]) * f[i] * g[i];
  return s;
}

cplx braket(std::span<const cplx> a, std::span<const double> f,
            std::span<const cplx> b) {
  cplx s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * f[i] * b[i];
  return s;
}

void scale(std::span<cplx> a, cplx s) {
  for (cplx& v : a) v *= s;
}

void multiply(std::span<cplx> a, std::span<const double> f) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= f[i];
}

void phase(std::span<cplx> a, std::span<const double> f, double k) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= std::polar(1.0, k * f[i]);
}

void diagonal_coupling(std::span<cplx> amps, std::size_t n,
                       std::span<const double> eigenvalues,
                       std::span<const double> f, double lambda) {
  for (std::size_t c = 0; c < eigenvalues.size(); ++c) {
    const double k = -lambda * eigenvalues[c];
    for (std::size_t i = 0; i < n; ++i) amps[c * n + i] *= std::polar(1.0, k * f[i]);
  }
}

void generator_exponential(std::span<cplx> amps, std::size_t n,
                           std::span<const GeneratorTerm> terms) {
  if (terms.empty()) return;
  const Eigen::Index d = terms.front().observable->rows();
  Eigen::MatrixXcd g(d, d);
  Eigen::VectorXcd v(d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(d);
  for (std::size_t i = 0; i < n; ++i) {
    g.setZero();
    for (const auto& t : terms) g += (t.strength * t.field[i]) * *t.observable;
    solver.compute(g);
    const auto& vecs = solver.eigenvectors();
    for (Eigen::Index c = 0; c < d; ++c) v[c] = amps[c * n + i];
    Eigen::VectorXcd w = vecs.adjoint() * v;
    for (Eigen::Index c = 0; c < d; ++c) w[c] *= std::polar(1.0, -solver.eigenvalues()[c]);
    v = vecs * w;
    for (Eigen::Index c = 0; c < d; ++c) amps[c * n + i] = v[c];
  }
}

void first_order_generator(std::span<cplx> amps, std::size_t n,
                           std::span<const GeneratorTerm> terms) {
  if (terms.empty()) return;
  const Eigen::Index d = terms.front().observable->rows();
  Eigen::MatrixXcd g(d, d);
  Eigen::VectorXcd v(d);
  const cplx minus_i(0.0, -1.0);
  for (std::size_t i = 0; i < n; ++i) {
    g.setZero();
    for (const auto& t : terms) g += (t.strength * t.field[i]) * *t.observable;
    for (Eigen::Index c = 0; c < d; ++c) v[c] = amps[c * n + i];
    Eigen::VectorXcd w = v + minus_i * (g * v);
    for (Eigen::Index c = 0; c < d; ++c) amps[c * n + i] = w[c];
  }
}

void rotate_components(std::span<cplx> amps, std::size_t n,
                       const Eigen::MatrixXcd& u) {
  const Eigen::Index d = u.rows();
  Eigen::VectorXcd v(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (Eigen::Index c = 0; c < d; ++c) v[c] = amps[c * n + i];
    Eigen::VectorXcd w = u * v;
    for (Eigen::Index c = 0; c < d; ++c) amps[c * n + i] = w[c];
  }
}

void contract(std::span<const cplx> amps, std::size_t n,
              const Eigen::VectorXcd& t, std::span<cplx> out) {
  const Eigen::Index d = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    cplx s{};
    for (Eigen::Index c = 0; c < d; ++c) s += std::conj(t[c]) * amps[c * n + i];
    out[i] = s;
  }
}

}  // namespace wmcorr::kernels::serial
