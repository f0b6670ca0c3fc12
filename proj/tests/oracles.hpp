#pragma once

// Brute-force reference computations used only by tests. None of these
// share code paths with the library routines they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hermix/graph.hpp"

namespace hermix::oracle {

using Cx = std::complex<double>;
using CxMatrix = std::vector<std::vector<Cx>>;

/// H(M) entry by entry straight from the adjacency definition.
inline CxMatrix direct_hermitian(const MixedGraph& g, int k) {
  const std::size_t n = g.order();
  const Cx w = std::polar(1.0, 2.0 * std::numbers::pi / k);
  CxMatrix h(n, std::vector<Cx>(n));
  for (auto [u, v] : g.edges()) h[u][v] = h[v][u] = 1.0;
  for (auto [u, v] : g.arcs()) {
    h[u][v] = w;
    h[v][u] = std::conj(w);
  }
  return h;
}

/// Leibniz expansion over all permutations.
inline Cx leibniz_det(const CxMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1.0;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Cx det = 0.0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Cx term = (inversions % 2) ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n && term != 0.0; ++i) term *= a[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// det(lambda I - H) coefficients, lowest power first, from sums of
/// principal minors: coeff of lambda^(n-j) is (-1)^j * sum_{|S|=j} det H_S.
inline std::vector<Cx> minors_char_poly(const CxMatrix& h) {
  const std::size_t n = h.size();
  std::vector<Cx> c(n + 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    CxMatrix sub(s.size(), std::vector<Cx>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) sub[i][j] = h[s[i]][s[j]];
    const std::size_t j = s.size();
    c[n - j] += ((j % 2) ? -1.0 : 1.0) * leibniz_det(sub);
  }
  return c;
}

/// Number of simple cycles (length >= 3) of the underlying graph, counted
/// over vertex subsets and their circular orders.
inline std::size_t brute_force_cycle_count(const MixedGraph& g) {
  const std::size_t n = g.order();
  std::set<std::vector<Vertex>> seen;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    if (s.size() < 3) continue;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < s.size() && ok; ++i) ok = g.adjacent(s[i], s[(i + 1) % s.size()]);
      if (!ok) continue;
      // canonical: rotate to min, choose direction with smaller second
      std::vector<Vertex> c = s;
      auto mn = std::min_element(c.begin(), c.end());
      std::rotate(c.begin(), mn, c.end());
      if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
      seen.insert(c);
    } while (std::next_permutation(s.begin(), s.end()));
  }
  return seen.size();
}

/// Product of H entries around the cycle, as a complex number.
inline Cx cycle_product(const CxMatrix& h, const std::vector<Vertex>& cycle) {
  Cx p = 1.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) p *= h[cycle[i]][cycle[(i + 1) % cycle.size()]];
  return p;
}

/// Spectrum of a cycle C_n whose gain product is omega^weight: the values
/// 2 cos((2 pi j + theta) / n) with theta = 2 pi weight / k.
inline std::vector<double> gain_cycle_spectrum(std::size_t n, int weight, int k) {
  std::vector<double> out;
  const double theta = 2.0 * std::numbers::pi * weight / k;
  for (std::size_t j = 0; j < n; ++j)
    out.push_back(2.0 * std::cos((2.0 * std::numbers::pi * static_cast<double>(j) + theta) / n));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Adds {u, v} to g as an undirected edge, u->v or v->u, uniformly.
inline void add_random_link(std::mt19937_64& rng, MixedGraph& g, Vertex u, Vertex v) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: g.add_edge(u, v); break;
    case 1: g.add_arc(u, v); break;
    default: g.add_arc(v, u); break;
  }
}

/// G(n, p) underlying graph with each edge independently undirected,
/// forward or backward.
inline MixedGraph random_mixed_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution keep(p);
  MixedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (keep(rng)) add_random_link(rng, g, u, v);
  return g;
}

/// Same underlying graph as g, each edge re-oriented uniformly at random.
inline MixedGraph random_reorientation(std::mt19937_64& rng, const MixedGraph& g) {
  MixedGraph out(g.order());
  for (auto [u, v] : underlying_pairs(g)) add_random_link(rng, out, u, v);
  return out;
}

/// Uniform random attachment tree with random orientations.
inline MixedGraph random_mixed_tree(std::mt19937_64& rng, std::size_t n) {
  MixedGraph g(n);
  for (Vertex v = 1; v < n; ++v)
    add_random_link(rng, g, std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  return g;
}

}  // namespace hermix::oracle
