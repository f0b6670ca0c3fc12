#pragma once

#include <cmath>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hermix/errors.hpp"
#include "hermix/gain.hpp"
#include "hermix/graph.hpp"
#include "hermix/spectra.hpp"
#include "hermix/switching.hpp"

namespace hermix {

// ---------------------------------------------------------------------------
// Potentials: value(v) - value(u) is prescribed mod `modulus` along every
// edge u-v and every arc u->v.
// ---------------------------------------------------------------------------

struct PotentialRule {
  int modulus = 0;
  int edge_shift = 0;  // value(v) - value(u) for an undirected edge u-v
  int arc_shift = 0;   // value(v) - value(u) for an arc u->v

  int shift(Link link) const {
    switch (link) {
      case Link::Undirected: return edge_shift;
      case Link::Out: return arc_shift;
      case Link::In: return modulus - arc_shift;
    }
    return 0;
  }
};

/// Eigenvector of eigenvalue +Delta: x_v = conj(h_uv) x_u, i.e. an arc
/// u->v lowers the exponent by one.
inline PotentialRule positive_rule(RootParameter k) { return {k.value(), 0, k.value() - 1}; }

/// Eigenvector of eigenvalue -Delta, written over zeta = exp(pi*i/k) so that
/// -1 = zeta^k and omega = zeta^2: an edge multiplies by -1, an arc u->v by
/// -conj(omega) = zeta^(k-2).
inline PotentialRule negative_rule(RootParameter k) {
  return {2 * k.value(), k.value(), k.value() - 2};
}

struct PotentialAssignment {
  int modulus = 0;
  std::vector<int> value;  // each component's smallest vertex has value 0
};

/// Simple cycle (closed implicitly from back to front) along which the
/// prescribed shifts do not sum to zero.
struct ConflictCycle {
  int modulus = 0;
  std::vector<Vertex> walk;
  int residue = 0;
};

using PotentialResult = std::variant<PotentialAssignment, ConflictCycle>;

/// Sum of prescribed shifts along the closed walk, mod the rule's modulus.
inline int walk_residue(const MixedGraph& g, const PotentialRule& rule,
                        const std::vector<Vertex>& walk) {
  long long sum = 0;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    Vertex a = walk[i];
    Vertex b = walk[(i + 1) % walk.size()];
    auto link = g.link(a, b);
    if (!link) throw NotACycle("walk uses a non-adjacent pair");
    sum += rule.shift(*link);
  }
  long long r = sum % rule.modulus;
  return static_cast<int>(r < 0 ? r + rule.modulus : r);
}

/// Breadth-first assignment from the smallest vertex of each component.
/// Returns the first conflicting fundamental cycle when none exists.
inline PotentialResult solve_potential(const MixedGraph& g, const PotentialRule& rule) {
  const std::size_t n = g.order();
  constexpr auto none = static_cast<Vertex>(-1);
  std::vector<int> value(n, -1);
  std::vector<Vertex> parent(n, none);
  std::vector<std::size_t> depth(n, 0);

  auto fundamental_cycle = [&](Vertex u, Vertex w) {
    std::vector<Vertex> up_u{u}, up_w{w};
    Vertex a = u, b = w;
    while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
    while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
    while (a != b) {
      up_u.push_back(a = parent[a]);
      up_w.push_back(b = parent[b]);
    }
    // up_u: u .. lca, up_w: w .. lca. Walk lca -> .. -> u -> w -> .. (lca excluded).
    std::vector<Vertex> walk(up_u.rbegin(), up_u.rend());
    walk.insert(walk.end(), up_w.begin(), up_w.end() - 1);
    return walk;
  };

  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (value[root] >= 0) continue;
    value[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (const auto& nb : g.neighbors(u)) {
        int expected = (value[u] + rule.shift(nb.link)) % rule.modulus;
        if (value[nb.vertex] < 0) {
          value[nb.vertex] = expected;
          parent[nb.vertex] = u;
          depth[nb.vertex] = depth[u] + 1;
          queue.push_back(nb.vertex);
        } else if (value[nb.vertex] != expected) {
          ConflictCycle c;
          c.modulus = rule.modulus;
          c.walk = fundamental_cycle(u, nb.vertex);
          c.residue = walk_residue(g, rule, c.walk);
          return c;
        }
      }
    }
  }
  return PotentialAssignment{rule.modulus, std::move(value)};
}

// ---------------------------------------------------------------------------
// Balance: cospectrality with the underlying graph
// ---------------------------------------------------------------------------

/// Partition with undirected edges inside parts and every arc u->v running
/// from part r to part s with r - s = 1 (mod k); or a cycle showing that no
/// such partition exists. Each component's smallest vertex lies in part 1.
inline std::variant<Partition, ConflictCycle> find_unit_partition(const MixedGraph& g,
                                                                  RootParameter k) {
  auto result = solve_potential(g, positive_rule(k));
  if (auto* c = std::get_if<ConflictCycle>(&result)) return std::move(*c);
  const auto& pot = std::get<PotentialAssignment>(result);
  std::vector<int> part(pot.value.size());
  for (std::size_t v = 0; v < part.size(); ++v) part[v] = pot.value[v] + 1;
  return Partition(k.value(), std::move(part));
}

/// Whether p satisfies the unit-partition constraints on g.
inline bool satisfies_positive_partition(const MixedGraph& g, const Partition& p, RootParameter k) {
  if (p.size() != g.order() || p.parts() != k.value()) return false;
  for (auto [u, v] : g.edges())
    if (p[u] != p[v]) return false;
  for (auto [u, v] : g.arcs())
    if (k.reduce(p[u] - p[v]) != 1) return false;
  return true;
}

struct BalanceReport {
  bool combinatorial = false;  // a unit partition exists
  bool numeric = false;        // lambda_1 matches the underlying graph's
  bool spectra_match = false;  // full spectrum matches the underlying graph's
  double lambda1 = 0.0;
  double lambda1_underlying = 0.0;
  double spectrum_gap = 0.0;
  std::variant<Partition, ConflictCycle> certificate;
};

/// Decides cospectrality with the underlying graph two ways, by the unit
/// partition and by comparing largest eigenvalues, and insists they agree.
inline BalanceReport cospectral_to_underlying(const MixedGraph& g, RootParameter k,
                                              double tol = default_cospectral_tolerance) {
  if (!is_connected(g)) throw DisconnectedGraph();
  BalanceReport r{.certificate = find_unit_partition(g, k)};
  r.combinatorial = std::holds_alternative<Partition>(r.certificate);
  if (g.order() == 0) {
    r.numeric = r.spectra_match = true;
    return r;
  }
  const auto mixed = eigenvalues(g, k);
  const auto plain = eigenvalues(underlying(g), k);
  r.lambda1 = mixed.largest();
  r.lambda1_underlying = plain.largest();
  r.spectrum_gap = spectrum_gap(mixed, plain);
  r.numeric = std::abs(r.lambda1 - r.lambda1_underlying) <= tol;
  r.spectra_match = r.spectrum_gap <= tol;
  if (r.combinatorial != r.numeric || r.numeric != r.spectra_match)
    throw TheoremViolation("balance verdicts disagree: partition " +
                           std::string(r.combinatorial ? "exists" : "absent") +
                           ", lambda1 gap " + std::to_string(r.lambda1_underlying - r.lambda1) +
                           ", spectrum gap " + std::to_string(r.spectrum_gap));
  return r;
}

// ---------------------------------------------------------------------------
// Spectral radius extremal graphs
// ---------------------------------------------------------------------------

enum class Outcome {
  NotRegular,
  NotExtremal,
  PositiveExtremal,      // +Delta is an eigenvalue
  NegativeExtremalEven,  // -Delta is an eigenvalue, k even
  NegativeExtremalOdd,   // -Delta is an eigenvalue, k odd
};

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::NotRegular: return "NotRegular";
    case Outcome::NotExtremal: return "NotExtremal";
    case Outcome::PositiveExtremal: return "PositiveExtremal";
    case Outcome::NegativeExtremalEven: return "NegativeExtremalEven";
    case Outcome::NegativeExtremalOdd: return "NegativeExtremalOdd";
  }
  return "?";
}

enum class Side : unsigned char { Primed, DoublePrimed };

/// 2k-part partition V'_1..V'_k, V''_1..V''_k for odd k. A vertex in V'_j
/// carries omega^(j-1), one in V''_j carries -omega^(j-1).
struct DoublePartition {
  int k = 0;
  std::vector<Side> side;
  std::vector<int> part;  // 1..k
  friend bool operator==(const DoublePartition&, const DoublePartition&) = default;
};

/// Parts differ by k/2 across undirected edges and by k/2 - 1 along arcs
/// (head minus tail); no edge inside a part.
inline bool satisfies_negative_partition(const MixedGraph& g, const Partition& p, RootParameter k) {
  const int kk = k.value();
  if (kk % 2 != 0 || p.size() != g.order() || p.parts() != kk) return false;
  for (auto [u, v] : g.edges())
    if (p[u] == p[v] || k.reduce(p[v] - p[u]) != kk / 2) return false;
  for (auto [u, v] : g.arcs())
    if (p[u] == p[v] || k.reduce(p[v] - p[u]) != kk / 2 - 1) return false;
  return true;
}

/// Undirected edges join V'_j and V''_j; an arc u->v leaves V'_r for V''_s
/// or V''_r for V'_s with r - s = 1.
inline bool satisfies_double_partition(const MixedGraph& g, const DoublePartition& dp,
                                       RootParameter k) {
  const std::size_t n = g.order();
  if (k.value() % 2 == 0 || dp.k != k.value() || dp.side.size() != n || dp.part.size() != n)
    return false;
  for (auto [u, v] : g.edges())
    if (dp.side[u] == dp.side[v] || dp.part[u] != dp.part[v]) return false;
  for (auto [u, v] : g.arcs())
    if (dp.side[u] == dp.side[v] || k.reduce(dp.part[u] - dp.part[v]) != 1) return false;
  return true;
}

struct ClassificationReport {
  bool regular = false;
  std::size_t delta = 0;
  double rho = 0.0;
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  Outcome outcome = Outcome::NotRegular;
  bool borderline = false;
  std::optional<Partition> positive_partition;
  std::optional<Partition> negative_partition;            // k even
  std::optional<DoublePartition> negative_double_partition;  // k odd
  std::optional<ConflictCycle> positive_conflict;
  std::optional<ConflictCycle> negative_conflict;

  bool extremal() const {
    return outcome == Outcome::PositiveExtremal || outcome == Outcome::NegativeExtremalEven ||
           outcome == Outcome::NegativeExtremalOdd;
  }
};

namespace detail {

inline Partition halve_to_partition(const PotentialAssignment& pot, RootParameter k) {
  std::vector<int> part(pot.value.size());
  for (std::size_t v = 0; v < part.size(); ++v) {
    if (pot.value[v] % 2 != 0) throw TheoremViolation("odd exponent in an even-k -Delta potential");
    part[v] = pot.value[v] / 2 + 1;
  }
  return Partition(k.value(), std::move(part));
}

// zeta^e with zeta^2 = omega and zeta^k = -1: even e is omega^(e/2); odd e
// is -omega^((e+k)/2) because e + k is even.
inline DoublePartition split_by_sign(const PotentialAssignment& pot, RootParameter k) {
  DoublePartition dp{k.value(), {}, {}};
  for (int e : pot.value) {
    if (e % 2 == 0) {
      dp.side.push_back(Side::Primed);
      dp.part.push_back(k.reduce(e / 2) + 1);
    } else {
      dp.side.push_back(Side::DoublePrimed);
      dp.part.push_back(k.reduce((e + k.value()) / 2) + 1);
    }
  }
  return dp;
}

}  // namespace detail

/// Classifies whether the spectral radius reaches the maximum degree, with
/// a checkable partition or a conflict cycle as evidence, and cross-checks
/// the verdict against the computed spectrum.
inline ClassificationReport extremal_classification(const MixedGraph& g, RootParameter k,
                                                    double tol = default_cospectral_tolerance) {
  if (g.size() == 0) throw InputError("extremal classification needs at least one edge");
  if (!is_connected(g)) throw DisconnectedGraph();

  ClassificationReport r;
  r.delta = max_degree(g);
  r.regular = is_regular(g);
  const auto spec = eigenvalues(g, k);
  r.lambda_max = spec.largest();
  r.lambda_min = spec.smallest();
  r.rho = spec.radius();

  const double delta = static_cast<double>(r.delta);
  const double pos_gap = std::abs(r.lambda_max - delta);
  const double neg_gap = std::abs(r.lambda_min + delta);
  const bool numeric_pos = pos_gap <= tol;
  const bool numeric_neg = neg_gap <= tol;
  auto near_boundary = [tol](double gap) { return gap > tol && gap <= 10.0 * tol; };
  r.borderline = near_boundary(pos_gap) || near_boundary(neg_gap);

  if (!r.regular) {
    if (numeric_pos || numeric_neg)
      throw TheoremViolation("spectral radius equals the maximum degree on a non-regular graph");
    r.outcome = Outcome::NotRegular;
    return r;
  }

  auto pos = solve_potential(g, positive_rule(k));
  auto neg = solve_potential(g, negative_rule(k));
  const bool pos_ok = std::holds_alternative<PotentialAssignment>(pos);
  const bool neg_ok = std::holds_alternative<PotentialAssignment>(neg);

  if (pos_ok) {
    std::vector<int> part;
    for (int e : std::get<PotentialAssignment>(pos).value) part.push_back(e + 1);
    r.positive_partition = Partition(k.value(), std::move(part));
  } else {
    r.positive_conflict = std::get<ConflictCycle>(pos);
  }
  if (neg_ok) {
    const auto& pot = std::get<PotentialAssignment>(neg);
    if (k.value() % 2 == 0)
      r.negative_partition = detail::halve_to_partition(pot, k);
    else
      r.negative_double_partition = detail::split_by_sign(pot, k);
  } else {
    r.negative_conflict = std::get<ConflictCycle>(neg);
  }

  if (pos_ok != numeric_pos)
    throw TheoremViolation("+Delta partition " + std::string(pos_ok ? "exists" : "absent") +
                           " but |lambda_max - Delta| = " + std::to_string(pos_gap));
  if (neg_ok != numeric_neg)
    throw TheoremViolation("-Delta partition " + std::string(neg_ok ? "exists" : "absent") +
                           " but |lambda_min + Delta| = " + std::to_string(neg_gap));

  if (pos_ok)
    r.outcome = Outcome::PositiveExtremal;
  else if (neg_ok)
    r.outcome = k.value() % 2 == 0 ? Outcome::NegativeExtremalEven : Outcome::NegativeExtremalOdd;
  else
    r.outcome = Outcome::NotExtremal;
  return r;
}

/// For odd k: whenever -Delta is an eigenvalue, +Delta must be one too.
/// Returns whether -Delta occurred.
inline bool negative_implies_positive_check(const MixedGraph& g, RootParameter k,
                                            double tol = default_cospectral_tolerance) {
  if (k.value() % 2 == 0) throw InputError("the -Delta => +Delta check applies to odd k only");
  if (!is_connected(g)) throw DisconnectedGraph();
  if (g.order() == 0) return false;
  const auto spec = eigenvalues(g, k);
  const double delta = static_cast<double>(max_degree(g));
  const bool triggered = std::abs(spec.smallest() + delta) <= tol;
  if (triggered && std::abs(spec.largest() - delta) > tol)
    throw TheoremViolation("-Delta is an eigenvalue but +Delta is not (largest eigenvalue " +
                           std::to_string(spec.largest()) + ")");
  return triggered;
}

}  // namespace hermix
