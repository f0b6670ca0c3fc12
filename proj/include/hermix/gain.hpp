#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "hermix/cycles.hpp"
#include "hermix/errors.hpp"
#include "hermix/graph.hpp"

namespace hermix {

/// The k in omega = exp(2*pi*i/k). Always at least 3.
class RootParameter {
 public:
  explicit RootParameter(long k) : k_(static_cast<int>(k)) {
    if (k < 3 || k > 1'000'000) throw InvalidRootParameter(k);
  }

  int value() const noexcept { return k_; }

  /// Representative of e in [0, k).
  int reduce(long long e) const noexcept {
    long long r = e % k_;
    return static_cast<int>(r < 0 ? r + k_ : r);
  }

  friend bool operator==(RootParameter, RootParameter) = default;

 private:
  int k_;
};

/// An entry of the gain matrix: absent, or omega^exponent with exponent in
/// [0, k).
using GainEntry = std::optional<int>;

/// Exact form of the Hermitian adjacency matrix: each entry is absent or a
/// power of omega. Entry (i, j) is present iff (j, i) is, and their
/// exponents sum to 0 mod k.
class GainMatrix {
 public:
  GainMatrix(std::size_t n, RootParameter k) : n_(n), k_(k), entries_(n * n) {}

  std::size_t order() const noexcept { return n_; }
  RootParameter root() const noexcept { return k_; }

  const GainEntry& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  /// Sets (i, j) to omega^e and (j, i) to its conjugate.
  void set(std::size_t i, std::size_t j, long long e) {
    int r = k_.reduce(e);
    entries_[i * n_ + j] = r;
    entries_[j * n_ + i] = k_.reduce(-static_cast<long long>(r));
  }

  bool is_hermitian() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if ((*this)(i, i)) return false;
      for (std::size_t j = i + 1; j < n_; ++j) {
        const auto& a = (*this)(i, j);
        const auto& b = (*this)(j, i);
        if (a.has_value() != b.has_value()) return false;
        if (a && k_.reduce(*a + *b) != 0) return false;
      }
    }
    return true;
  }

  friend bool operator==(const GainMatrix&, const GainMatrix&) = default;

 private:
  std::size_t n_;
  RootParameter k_;
  std::vector<GainEntry> entries_;
};

/// Undirected edge -> 1 both ways; arc u->v -> omega at (u,v) and
/// conj(omega) at (v,u); everything else absent.
inline GainMatrix gain_matrix(const MixedGraph& g, RootParameter k) {
  GainMatrix m(g.order(), k);
  for (auto [u, v] : g.edges()) m.set(u, v, 0);
  for (auto [u, v] : g.arcs()) m.set(u, v, 1);
  return m;
}

/// Exponent of the product of entries along cycle[0] -> cycle[1] -> ... ->
/// cycle[0].
inline int cycle_weight(const GainMatrix& m, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) throw NotACycle("a cycle needs at least three vertices");
  long long sum = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Vertex a = cycle[i];
    Vertex b = cycle[(i + 1) % cycle.size()];
    if (a >= m.order() || b >= m.order()) throw IndexOutOfRange(std::max(a, b), m.order());
    const auto& entry = m(a, b);
    if (!entry)
      throw NotACycle("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                      " are not adjacent");
    sum += *entry;
  }
  return m.root().reduce(sum);
}

/// cos(2*pi*e/k).
inline double real_part(long long e, RootParameter k) {
  int r = k.reduce(e);
  if (r == 0) return 1.0;
  return std::cos(2.0 * std::numbers::pi * r / k.value());
}

inline constexpr double real_part_tolerance = 1e-12;

/// True iff every simple cycle of the shared underlying graph has weights
/// with equal real parts in both graphs. A true result implies the two
/// graphs are cospectral; the converse need not hold.
inline bool cycle_realparts_match(const MixedGraph& a, const MixedGraph& b, RootParameter k,
                                  std::size_t cycle_cap = default_cycle_cap) {
  if (!same_underlying(a, b)) throw UnderlyingMismatch();
  const auto ma = gain_matrix(a, k);
  const auto mb = gain_matrix(b, k);
  for (const auto& c : enumerate_simple_cycles(a, cycle_cap)) {
    double ra = real_part(cycle_weight(ma, c), k);
    double rb = real_part(cycle_weight(mb, c), k);
    if (std::abs(ra - rb) > real_part_tolerance) return false;
  }
  return true;
}

}  // namespace hermix
