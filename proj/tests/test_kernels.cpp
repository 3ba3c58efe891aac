#include <random>

#include <gtest/gtest.h>

#include "wmcorr/kernels.hpp"
#include "wmcorr/quantum_core.hpp"

using namespace wmcorr;
namespace k = wmcorr::kernels;

namespace {

struct Data {
  std::vector<cplx> a, b;
  std::vector<double> f, g;
};

Data make_data(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Data d;
  for (std::size_t i = 0; i < n; ++i) {
    d.a.emplace_back(nd(rng), nd(rng));
    d.b.emplace_back(nd(rng), nd(rng));
    d.f.push_back(nd(rng));
    d.g.push_back(nd(rng));
  }
  return d;
}

// Restores the thread count after each test.
class Kernels : public ::testing::Test {
 protected:
  void TearDown() override { k::set_threads(saved_); }
  int saved_ = k::max_threads();
};

}  // namespace

TEST_F(Kernels, ReductionsMatchSerialReference) {
  const auto d = make_data(3 * k::kReductionBlock + 123, 1);
  EXPECT_NEAR(k::parallel::norm_sq(d.a), k::serial::norm_sq(d.a), 1e-10);
  EXPECT_NEAR(k::parallel::weighted_norm(d.a, d.f), k::serial::weighted_norm(d.a, d.f), 1e-10);
  EXPECT_NEAR(k::parallel::weighted_norm2(d.a, d.f, d.g), k::serial::weighted_norm2(d.a, d.f, d.g), 1e-10);
  EXPECT_LT(std::abs(k::parallel::braket(d.a, d.f, d.b) - k::serial::braket(d.a, d.f, d.b)), 1e-10);
}

TEST_F(Kernels, ReductionsBitIdenticalAcrossThreadCounts) {
  const auto d = make_data(5 * k::kReductionBlock + 7, 2);
  k::set_threads(1);
  const double n1 = k::parallel::weighted_norm2(d.a, d.f, d.g);
  const cplx b1 = k::parallel::braket(d.a, d.f, d.b);
  for (int t : {2, 3, 4}) {
    k::set_threads(t);
    EXPECT_EQ(k::parallel::weighted_norm2(d.a, d.f, d.g), n1) << t;
    EXPECT_EQ(k::parallel::braket(d.a, d.f, d.b), b1) << t;
  }
}

TEST_F(Kernels, ElementwiseMatchSerial) {
  const auto d = make_data(10000, 3);
  auto s = d.a, p = d.a;
  k::serial::multiply(s, d.f);
  k::parallel::multiply(p, d.f);
  k::serial::phase(s, d.g, 0.7);
  k::parallel::phase(p, d.g, 0.7);
  k::serial::scale(s, cplx(0.3, -1.1));
  k::parallel::scale(p, cplx(0.3, -1.1));
  EXPECT_EQ(s, p);
}

TEST_F(Kernels, CouplingKernelsMatchSerial) {
  const std::size_t n = 4000;
  const auto d = make_data(n, 4);
  std::vector<cplx> amps(d.a);
  amps.insert(amps.end(), d.b.begin(), d.b.end());
  const CMatrix ax = Observable::pauli_x().matrix(), ay = Observable::pauli_y().matrix();
  const std::vector<k::GeneratorTerm> terms{{&ax, d.f, 0.3}, {&ay, d.g, -0.2}};

  auto s = amps, p = amps;
  k::serial::generator_exponential(s, n, terms);
  k::parallel::generator_exponential(p, n, terms);
  for (std::size_t i = 0; i < s.size(); ++i) ASSERT_LT(std::abs(s[i] - p[i]), 1e-14);

  s = amps, p = amps;
  k::serial::first_order_generator(s, n, terms);
  k::parallel::first_order_generator(p, n, terms);
  EXPECT_EQ(s, p);

  const std::vector<double> ev{-1.0, 2.0};
  s = amps, p = amps;
  k::serial::diagonal_coupling(s, n, ev, d.f, 0.4);
  k::parallel::diagonal_coupling(p, n, ev, d.f, 0.4);
  EXPECT_EQ(s, p);

  const CMatrix u = eigendecompose(Observable::pauli_y()).eigenvectors;
  s = amps, p = amps;
  k::serial::rotate_components(s, n, u);
  k::parallel::rotate_components(p, n, u);
  for (std::size_t i = 0; i < s.size(); ++i) ASSERT_LT(std::abs(s[i] - p[i]), 1e-15);

  Eigen::VectorXcd t(2);
  t << cplx(0.6, 0.1), cplx(-0.2, 0.7);
  std::vector<cplx> cs(n), cp(n);
  k::serial::contract(amps, n, t, cs);
  k::parallel::contract(amps, n, t, cp);
  EXPECT_EQ(cs, cp);
}

TEST_F(Kernels, GeneratorExponentialIsExactForDiagonal) {
  // exp(-i lambda f sigma_z) multiplies the two components by exp(-+i lambda f).
  const std::size_t n = 100;
  const auto d = make_data(n, 5);
  std::vector<cplx> amps(d.a);
  amps.insert(amps.end(), d.b.begin(), d.b.end());
  const CMatrix z = Observable::pauli_z().matrix();
  const std::vector<k::GeneratorTerm> terms{{&z, d.f, 0.25}};
  auto out = amps;
  k::parallel::generator_exponential(out, n, terms);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_LT(std::abs(out[i] - amps[i] * std::exp(cplx(0, -0.25 * d.f[i]))), 1e-13);
    EXPECT_LT(std::abs(out[n + i] - amps[n + i] * std::exp(cplx(0, 0.25 * d.f[i]))), 1e-13);
  }
}
