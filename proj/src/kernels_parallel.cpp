#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wmcorr/kernels.hpp"

namespace wmcorr::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

namespace {

// Splits [0, n) into kReductionBlock-sized blocks, reduces each block with
// `body(begin, end)` in parallel and adds the partials in block order.
template <typename T, typename Body>
T block_reduce(std::size_t n, Body body) {
  const std::size_t nblocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<T> partial(nblocks, T{});
  const auto nb = static_cast<std::ptrdiff_t>(nblocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nb; ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t end = std::min(n, begin + kReductionBlock);
    partial[b] = body(begin, end);
  }
  T total{};
  for (const T& p : partial) total += p;
  return total;
}

}  // namespace

namespace parallel {

double norm_sq(std::span<const cplx> a) {
  return block_reduce<double>(a.size(), [&](std::size_t b, std::size_t e) {
    double s = 0.0;
    for (std::size_t i = b; i < e; ++i) s += std::norm(a[i]);
    return s;
  });
}

double weighted_norm(std::span<const cplx> a, std::span<const double> f) {
  return block_reduce<double>(a.size(), [&](std::size_t b, std::size_t e) {
    double s = 0.0;
    for (std::size_t i = b; i < e; ++i) s += std::norm(a[i]) * f[i];
    return s;
  });
}

double weighted_norm2(std::span<const cplx> a, std::span<const double> f,
                      std::span<const double> g) {
  return block_reduce<double>(a.size(), [&](std::size_t b, std::size_t e) {
    double s = 0.0;
    for (std::size_t i = b; i < e; ++i) s += std::norm(a[i]) * f[i] * g[i];
    return s;
  });
}

cplx braket(std::span<const cplx> a, std::span<const double> f,
            std::span<const cplx> b) {
  return block_reduce<cplx>(a.size(), [&](std::size_t lo, std::size_t hi) {
    cplx s{};
    for (std::size_t i = lo; i < hi; ++i) s += std::conj(a[i]) * f[i] * b[i];
    return s;
  });
}

void scale(std::span<cplx> a, cplx s) {
  const auto n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) a[i] *= s;
}

void multiply(std::span<cplx> a, std::span<const double> f) {
  const auto n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) a[i] *= f[i];
}

void phase(std::span<cplx> a, std::span<const double> f, double k) {
  const auto n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) a[i] *= std::polar(1.0, k * f[i]);
}

void diagonal_coupling(std::span<cplx> amps, std::size_t n,
                       std::span<const double> eigenvalues,
                       std::span<const double> f, double lambda) {
  const auto np = static_cast<std::ptrdiff_t>(n);
  const std::size_t d = eigenvalues.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < np; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      amps[c * n + i] *= std::polar(1.0, -lambda * eigenvalues[c] * f[i]);
    }
  }
}

void generator_exponential(std::span<cplx> amps, std::size_t n,
                           std::span<const GeneratorTerm> terms) {
  if (terms.empty()) return;
  const Eigen::Index d = terms.front().observable->rows();
  const auto np = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
    Eigen::MatrixXcd g(d, d);
    Eigen::VectorXcd v(d), w(d);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(d);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < np; ++i) {
      g.setZero();
      for (const auto& t : terms) g += (t.strength * t.field[i]) * *t.observable;
      solver.compute(g);
      const auto& vecs = solver.eigenvectors();
      for (Eigen::Index c = 0; c < d; ++c) v[c] = amps[c * n + i];
      w.noalias() = vecs.adjoint() * v;
      for (Eigen::Index c = 0; c < d; ++c) w[c] *= std::polar(1.0, -solver.eigenvalues()[c]);
      v.noalias() = vecs * w;
      for (Eigen::Index c = 0; c < d; ++c) amps[c * n + i] = v[c];
    }
  }
}

void first_order_generator(std::span<cplx> amps, std::size_t n,
                           std::span<const GeneratorTerm> terms) {
  if (terms.empty()) return;
  const Eigen::Index d = terms.front().observable->rows();
  const auto np = static_cast<std::ptrdiff_t>(n);
  const cplx minus_i(0.0, -1.0);
#pragma omp parallel
  {
    Eigen::MatrixXcd g(d, d);
    Eigen::VectorXcd v(d), w(d);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < np; ++i) {
      g.setZero();
      for (const auto& t : terms) g += (t.strength * t.field[i]) * *t.observable;
      for (Eigen::Index c = 0; c < d; ++c) v[c] = amps[c * n + i];
      w.noalias() = g * v;
      for (Eigen::Index c = 0; c < d; ++c) amps[c * n + i] = v[c] + minus_i * w[c];
    }
  }
}

void rotate_components(std::span<cplx> amps, std::size_t n,
                       const Eigen::MatrixXcd& u) {
  const Eigen::Index d = u.rows();
  const auto np = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
    Eigen::VectorXcd v(d), w(d);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < np; ++i) {
      for (Eigen::Index c = 0; c < d; ++c) v[c] = amps[c * n + i];
      w.noalias() = u * v;
      for (Eigen::Index c = 0; c < d; ++c) amps[c * n + i] = w[c];
    }
  }
}

void contract(std::span<const cplx> amps, std::size_t n,
              const Eigen::VectorXcd& t, std::span<cplx> out) {
  const Eigen::Index d = t.size();
  const auto np = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < np; ++i) {
    cplx s{};
    for (Eigen::Index c = 0; c < d; ++c) s += std::conj(t[c]) * amps[c * n + i];
    out[i] = s;
  }
}

}  // namespace parallel
}  // namespace wmcorr::kernels
