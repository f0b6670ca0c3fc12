#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hermix/char_poly.hpp"
#include "hermix/spectra.hpp"
#include "oracles.hpp"

namespace hermix {
namespace {

const double kSqrt3 = std::sqrt(3.0);

void expect_spectrum(const Spectrum& s, const std::vector<double>& expected, double tol = 1e-10) {
  ASSERT_EQ(s.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(s.values[i], expected[i], tol) << i;
}

TEST(HermitianMatrix, Edge) {
  auto h = hermitian_matrix(parse_graph("n 2\ne 0 1"), RootParameter(5));
  EXPECT_EQ(h(0, 1), Complex(1, 0));
  EXPECT_EQ(h(1, 0), Complex(1, 0));
  EXPECT_EQ(h(0, 0), Complex(0, 0));
}

TEST(HermitianMatrix, ArcK4IsI) {
  auto h = hermitian_matrix(parse_graph("n 2\na 0 1"), RootParameter(4));
  EXPECT_NEAR(std::abs(h(0, 1) - Complex(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(1, 0) - Complex(0, -1)), 0.0, 1e-15);
}

TEST(HermitianMatrix, ArcK3) {
  auto h = hermitian_matrix(parse_graph("n 2\na 0 1"), RootParameter(3));
  EXPECT_NEAR(std::abs(h(0, 1) - Complex(-0.5, kSqrt3 / 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(1, 0) - Complex(-0.5, -kSqrt3 / 2)), 0.0, 1e-15);
}

TEST(HermitianMatrix, ExactConjugateSymmetryAndRealization) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int kk = 3 + trial % 7;
    auto g = oracle::random_mixed_graph(rng, 7, 0.5);
    auto h = hermitian_matrix(g, RootParameter(kk));
    auto direct = oracle::direct_hermitian(g, kk);
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t j = 0; j < g.order(); ++j) {
        EXPECT_EQ(h(j, i), std::conj(h(i, j)));
        EXPECT_LE(std::abs(h(i, j) - direct[i][j]), 1e-15);
      }
  }
}

TEST(HermitianMatrix, RejectsNonHermitianInput) {
  EXPECT_THROW(HermitianMatrix(2, {0, 1, 2, 0}), NotHermitian);
  EXPECT_THROW(HermitianMatrix(2, {Complex(0, 1), 0, 0, 0}), NotHermitian);
  EXPECT_THROW(HermitianMatrix(2, {0, 1, 1}), NotHermitian);
  EXPECT_NO_THROW(HermitianMatrix(2, {0, Complex(0, 1), Complex(0, -1), 0}));
}

TEST(Eigenvalues, SmallExamples) {
  expect_spectrum(eigenvalues(parse_graph("n 2\ne 0 1"), RootParameter(3)), {1, -1});
  for (int k : {3, 4, 5, 8})
    expect_spectrum(eigenvalues(parse_graph("n 2\na 0 1"), RootParameter(k)), {1, -1});
}

TEST(Eigenvalues, DirectedC6K4MatchesCirculantFormula) {
  auto s = eigenvalues(families::directed_cycle(6), RootParameter(4));
  // Weight omega^6 = omega^2 for k = 4.
  auto expected = oracle::gain_cycle_spectrum(6, 6, 4);
  expect_spectrum(s, expected);
  expect_spectrum(s, {kSqrt3, kSqrt3, 0, 0, -kSqrt3, -kSqrt3});
}

TEST(Eigenvalues, DirectedCyclesMatchCirculantFormula) {
  for (std::size_t n = 3; n <= 9; ++n)
    for (int k = 3; k <= 8; ++k)
      expect_spectrum(eigenvalues(families::directed_cycle(n), RootParameter(k)),
                      oracle::gain_cycle_spectrum(n, static_cast<int>(n), k));
}

TEST(Eigenvalues, DegenerateSizes) {
  EXPECT_EQ(eigenvalues(HermitianMatrix(0)).size(), 0u);
  auto one = eigenvalues(MixedGraph(1), RootParameter(3));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.values[0], 0.0);
  expect_spectrum(eigenvalues(MixedGraph(4), RootParameter(3)), {0, 0, 0, 0}, 0.0);
}

TEST(Eigenvalues, DeterministicAndSmallResidual) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_mixed_graph(rng, 1 + trial % 15, 0.5);
    RootParameter k(3 + trial % 6);
    auto a = eigenvalues(g, k);
    auto b = eigenvalues(g, k);
    EXPECT_EQ(a.values, b.values);
    EXPECT_TRUE(std::is_sorted(a.values.rbegin(), a.values.rend()));
    EXPECT_LE(a.residual, 1e-9 * static_cast<double>(g.order()));
  }
}

TEST(Eigenvalues, TraceZeroAndRadiusBound) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = oracle::random_mixed_graph(rng, 2 + trial % 11, 0.5);
    RootParameter k(3 + trial % 6);
    auto s = eigenvalues(g, k);
    double delta = static_cast<double>(max_degree(g));
    EXPECT_LE(std::abs(s.trace()), 1e-9 * static_cast<double>(g.order()) * std::max(delta, 1.0));
    EXPECT_LE(s.radius(), delta + 1e-8);
  }
}

TEST(Eigenvalues, LargerGraphStillResolves) {
  std::mt19937_64 rng(43);
  auto g = oracle::random_mixed_graph(rng, 120, 0.1);
  auto s = eigenvalues(g, RootParameter(7));
  EXPECT_EQ(s.size(), 120u);
  EXPECT_LE(s.residual, 1e-9 * 120);
}

TEST(SpectralRadius, Examples) {
  EXPECT_NEAR(spectral_radius(families::cycle(6), RootParameter(3)), 2.0, 1e-12);
  EXPECT_NEAR(spectral_radius(families::directed_cycle(6), RootParameter(4)), kSqrt3, 1e-12);
  EXPECT_EQ(spectral_radius(MixedGraph(5), RootParameter(3)), 0.0);
  EXPECT_EQ(spectral_radius(MixedGraph(0), RootParameter(3)), 0.0);
}

TEST(LeadingEigenpair, K2) {
  auto p = leading_eigenpair(hermitian_matrix(families::path(2), RootParameter(3)));
  EXPECT_NEAR(p.value, 1.0, 1e-12);
  // Up to a global phase: |x_i| = 1/sqrt 2 and x_0 = x_1.
  EXPECT_NEAR(std::abs(p.vector[0]), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(p.vector[0] - p.vector[1]), 0.0, 1e-12);
}

TEST(LeadingEigenpair, C4ConstantVector) {
  auto p = leading_eigenpair(hermitian_matrix(families::cycle(4), RootParameter(5)));
  EXPECT_NEAR(p.value, 2.0, 1e-12);
  for (const auto& z : p.vector) {
    EXPECT_NEAR(std::abs(z), 0.5, 1e-10);
    EXPECT_NEAR(std::abs(z - p.vector[0]), 0.0, 1e-10);
  }
}

TEST(LeadingEigenpair, DirectedC3K3HasPhasesInT3) {
  auto p = leading_eigenpair(hermitian_matrix(families::directed_cycle(3), RootParameter(3)));
  EXPECT_NEAR(p.value, 2.0, 1e-12);
  for (const auto& z : p.vector) {
    EXPECT_NEAR(std::abs(z), 1 / kSqrt3, 1e-10);
    Complex ratio = z / p.vector[0];
    // ratio must be a cube root of unity
    EXPECT_NEAR(std::abs(ratio * ratio * ratio - Complex(1, 0)), 0.0, 1e-9);
  }
  EXPECT_LE(p.residual, 1e-9 * 3);
}

TEST(LeadingEigenpair, UnitNormOnRandomGraphs) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_mixed_graph(rng, 2 + trial % 9, 0.6);
    auto h = hermitian_matrix(g, RootParameter(3 + trial % 5));
    auto p = leading_eigenpair(h);
    double norm = 0;
    for (auto z : p.vector) norm += std::norm(z);
    EXPECT_NEAR(norm, 1.0, 1e-12);
    EXPECT_NEAR(p.value, eigenvalues(h).largest(), 1e-10);
  }
}

TEST(CharPoly, K2) {
  auto c = char_poly(hermitian_matrix(families::path(2), RootParameter(3)));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_NEAR(c[0], -1, 1e-12);
  EXPECT_NEAR(c[1], 0, 1e-12);
  EXPECT_NEAR(c[2], 1, 1e-12);
}

TEST(CharPoly, TrianglesAgainstPrincipalMinors) {
  // Undirected C3: lambda^3 - 3 lambda - 2. Directed C3, k = 4: lambda^3 - 3 lambda.
  const std::vector<double> undirected{-2, -3, 0, 1};
  const std::vector<double> directed_k4{0, -3, 0, 1};
  auto minors_u = oracle::minors_char_poly(oracle::direct_hermitian(families::cycle(3), 4));
  auto minors_d = oracle::minors_char_poly(oracle::direct_hermitian(families::directed_cycle(3), 4));
  auto fl_u = char_poly(hermitian_matrix(families::cycle(3), RootParameter(4)));
  auto fl_d = char_poly(hermitian_matrix(families::directed_cycle(3), RootParameter(4)));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(minors_u[i].real(), undirected[i], 1e-12);
    EXPECT_NEAR(minors_d[i].real(), directed_k4[i], 1e-12);
    EXPECT_NEAR(fl_u[i], undirected[i], 1e-12);
    EXPECT_NEAR(fl_d[i], directed_k4[i], 1e-12);
  }
}

TEST(CharPoly, MatchesPrincipalMinorsOnRandomGraphs) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const int kk = 3 + trial % 6;
    auto g = oracle::random_mixed_graph(rng, 1 + trial % 6, 0.6);
    auto fl = char_poly(hermitian_matrix(g, RootParameter(kk)));
    auto minors = oracle::minors_char_poly(oracle::direct_hermitian(g, kk));
    for (std::size_t i = 0; i < fl.size(); ++i) {
      EXPECT_NEAR(fl[i], minors[i].real(), 1e-9);
      EXPECT_NEAR(minors[i].imag(), 0.0, 1e-9);
    }
  }
}

TEST(CharPoly, Errors) {
  EXPECT_THROW(char_poly(hermitian_matrix(MixedGraph(11), RootParameter(3))), OracleCapExceeded);
  EXPECT_NO_THROW(char_poly(hermitian_matrix(MixedGraph(11), RootParameter(3)), 11));
}

TEST(RealRootedRoots, RepeatedRoots) {
  // (x - 1)^3 (x + 2)^2 x
  std::vector<double> p{1};
  auto mul = [&](double r) {
    std::vector<double> q(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= r * p[i];
    }
    p = q;
  };
  for (double r : {1.0, 1.0, 1.0, -2.0, -2.0, 0.0}) mul(r);
  auto roots = real_rooted_roots(p);
  std::vector<double> expected{-2, -2, 0, 1, 1, 1};
  ASSERT_EQ(roots.size(), expected.size());
  for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_NEAR(roots[i], expected[i], 1e-7);
}

TEST(RealRootedRoots, AgreeWithEigenvalues) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_mixed_graph(rng, 1 + trial % 6, 0.5);
    auto h = hermitian_matrix(g, RootParameter(3 + trial % 6));
    auto roots = real_rooted_roots(char_poly(h));
    std::sort(roots.rbegin(), roots.rend());
    auto s = eigenvalues(h);
    ASSERT_EQ(roots.size(), s.size());
    for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_NEAR(roots[i], s.values[i], 1e-6);
  }
}

TEST(Cospectral, C6VersusDirectedC6) {
  auto c6 = families::cycle(6);
  auto d6 = families::directed_cycle(6);
  auto k6 = cospectral(c6, d6, RootParameter(6));
  EXPECT_TRUE(k6.cospectral);
  EXPECT_LE(k6.max_gap, 1e-10);

  auto k4 = cospectral(c6, d6, RootParameter(4));
  EXPECT_FALSE(k4.cospectral);
  // Sorted spectra {2,1,1,-1,-1,-2} vs {r3,r3,0,0,-r3,-r3}.
  auto a = oracle::gain_cycle_spectrum(6, 0, 4);
  auto b = oracle::gain_cycle_spectrum(6, 6, 4);
  double gap = 0;
  for (std::size_t i = 0; i < 6; ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  EXPECT_NEAR(k4.max_gap, gap, 1e-10);
  EXPECT_GE(k4.max_gap, 2 - kSqrt3);
}

TEST(Cospectral, MixedTreeAndUnderlying) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    auto t = oracle::random_mixed_tree(rng, 2 + trial % 10);
    EXPECT_TRUE(cospectral(t, underlying(t), RootParameter(3 + trial % 6)).cospectral);
  }
}

TEST(Cospectral, DifferentOrdersAreNot) {
  auto r = cospectral(families::path(3), families::path(4), RootParameter(3));
  EXPECT_FALSE(r.cospectral);
  EXPECT_TRUE(std::isinf(r.max_gap));
}

TEST(Cospectral, ConverseAlwaysCospectral) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_mixed_graph(rng, 2 + trial % 9, 0.5);
    EXPECT_TRUE(cospectral(g, converse(g), RootParameter(3 + trial % 6)).cospectral);
  }
}

}  // namespace
}  // namespace hermix
