#pragma once

// Grid-point kernels. Every kernel exists twice with identical signatures:
// `serial::` is the straightforward reference loop kept for testing, and
// `parallel::` is the OpenMP version used by the library. Parallel
// reductions accumulate fixed-size blocks and add the block partials in
// order, so their result does not depend on the thread count.
//
// Joint amplitudes are component-major: amps[c * n + i] is system
// component c at grid point i.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace wmcorr::kernels {

using cplx = std::complex<double>;

/// Block length of the deterministic parallel reductions.
inline constexpr std::size_t kReductionBlock = 4096;

/// One term lambda * A (x) xi of a coupling generator; `field` holds the
/// quadrature value xi at every grid point.
struct GeneratorTerm {
  const Eigen::MatrixXcd* observable;
  std::span<const double> field;
  double strength;
};

#define WMCORR_KERNEL_DECLS                                                    \
  /* sum_i |a_i|^2 */                                                          \
  double norm_sq(std::span<const cplx> a);                                     \
  /* sum_i |a_i|^2 f_i */                                                      \
  double weighted_norm(std::span<const cplx> a, std::span<const double> f);    \
  /* sum_i |a_i|^2 f_i g_i */                                                  \
  double weighted_norm2(std::span<const cplx> a, std::span<const double> f,    \
                        std::span<const double> g);                            \
  /* sum_i conj(a_i) f_i b_i */                                                \
  cplx braket(std::span<const cplx> a, std::span<const double> f,              \
              std::span<const cplx> b);                                        \
  /* a_i *= s */                                                               \
  void scale(std::span<cplx> a, cplx s);                                       \
  /* a_i *= f_i */                                                             \
  void multiply(std::span<cplx> a, std::span<const double> f);                 \
  /* a_i *= exp(i k f_i) */                                                    \
  void phase(std::span<cplx> a, std::span<const double> f, double k);          \
  /* amps[c*n+i] *= exp(-i lambda e_c f_i) */                                  \
  void diagonal_coupling(std::span<cplx> amps, std::size_t n,                  \
                         std::span<const double> eigenvalues,                  \
                         std::span<const double> f, double lambda);            \
  /* v_i <- exp(-i sum_k lambda_k f_k(i) A_k) v_i */                           \
  void generator_exponential(std::span<cplx> amps, std::size_t n,              \
                             std::span<const GeneratorTerm> terms);            \
  /* v_i <- (1 - i sum_k lambda_k f_k(i) A_k) v_i */                           \
  void first_order_generator(std::span<cplx> amps, std::size_t n,              \
                             std::span<const GeneratorTerm> terms);            \
  /* v_i <- U v_i */                                                           \
  void rotate_components(std::span<cplx> amps, std::size_t n,                  \
                         const Eigen::MatrixXcd& u);                           \
  /* out_i = sum_c conj(t_c) amps[c*n+i] */                                    \
  void contract(std::span<const cplx> amps, std::size_t n,                     \
                const Eigen::VectorXcd& t, std::span<cplx> out);

namespace serial {
WMCORR_KERNEL_DECLS
}  // namespace serial

namespace parallel {
WMCORR_KERNEL_DECLS
}  // namespace parallel

#undef WMCORR_KERNEL_DECLS

using namespace parallel;

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();
void set_threads(int n);

}  // namespace wmcorr::kernels
