// Serial reference vs OpenMP kernels on grid sizes used by the scenarios.
// Arg is the total number of grid points.

#include <random>

#include <benchmark/benchmark.h>

#include "wmcorr/kernels.hpp"
#include "wmcorr/quantum_core.hpp"

namespace k = wmcorr::kernels;
using wmcorr::cplx;

namespace {

struct Fixture {
  std::vector<cplx> amps;  // two system components
  std::vector<double> f, g;
};

Fixture make(std::size_t n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  Fixture x;
  x.amps.resize(2 * n);
  for (auto& z : x.amps) z = {nd(rng), nd(rng)};
  x.f.resize(n);
  x.g.resize(n);
  for (auto& v : x.f) v = nd(rng);
  for (auto& v : x.g) v = nd(rng);
  return x;
}

template <bool Parallel>
void BM_Braket(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Fixture x = make(n);
  const std::span<const cplx> a(x.amps.data(), n), b(x.amps.data() + n, n);
  for (auto _ : st) {
    benchmark::DoNotOptimize(Parallel ? k::parallel::braket(a, x.f, b) : k::serial::braket(a, x.f, b));
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(n));
}

template <bool Parallel>
void BM_DiagonalCoupling(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  Fixture x = make(n);
  const std::vector<double> ev{-1.0, 1.0};
  for (auto _ : st) {
    if (Parallel) {
      k::parallel::diagonal_coupling(x.amps, n, ev, x.f, 1e-3);
    } else {
      k::serial::diagonal_coupling(x.amps, n, ev, x.f, 1e-3);
    }
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(n));
}

template <bool Parallel>
void BM_GeneratorExponential(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  Fixture x = make(n);
  const Eigen::MatrixXcd ax = wmcorr::Observable::pauli_x().matrix();
  const Eigen::MatrixXcd ay = wmcorr::Observable::pauli_y().matrix();
  const std::vector<k::GeneratorTerm> terms{{&ax, x.f, 0.05}, {&ay, x.g, 0.05}};
  for (auto _ : st) {
    if (Parallel) {
      k::parallel::generator_exponential(x.amps, n, terms);
    } else {
      k::serial::generator_exponential(x.amps, n, terms);
    }
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(n));
}

}  // namespace

#define SIZES ->Arg(64 * 64)->Arg(256 * 256)->Arg(64 * 64 * 64)
BENCHMARK(BM_Braket<false>) SIZES;
BENCHMARK(BM_Braket<true>) SIZES;
BENCHMARK(BM_DiagonalCoupling<false>) SIZES;
BENCHMARK(BM_DiagonalCoupling<true>) SIZES;
BENCHMARK(BM_GeneratorExponential<false>)->Arg(64 * 64)->Arg(256 * 256);
BENCHMARK(BM_GeneratorExponential<true>)->Arg(64 * 64)->Arg(256 * 256);

BENCHMARK_MAIN();
