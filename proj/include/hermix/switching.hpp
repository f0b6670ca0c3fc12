#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "hermix/cycles.hpp"
#include "hermix/errors.hpp"
#include "hermix/gain.hpp"
#include "hermix/graph.hpp"

namespace hermix {

/// Assignment of every vertex to one of the parts 1..k (parts may be
/// empty). Part j pairs with the diagonal factor omega^(j-1).
class Partition {
 public:
  Partition(int parts, std::vector<int> part) : parts_(parts), part_(std::move(part)) {
    if (parts < 1) throw PartitionMismatch("a partition needs at least one part");
    for (std::size_t v = 0; v < part_.size(); ++v)
      if (part_[v] < 1 || part_[v] > parts)
        throw PartitionMismatch("vertex " + std::to_string(v) + " assigned to part " +
                                std::to_string(part_[v]) + ", outside 1.." +
                                std::to_string(parts));
  }

  /// Every vertex in part 1.
  static Partition trivial(int parts, std::size_t n) { return {parts, std::vector<int>(n, 1)}; }

  int parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return part_.size(); }
  int operator[](Vertex v) const { return part_.at(v); }
  const std::vector<int>& assignment() const noexcept { return part_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int parts_;
  std::vector<int> part_;
};

/// "v0:1,v1:2,..." or "0:1,1:2,...". Unlisted vertices default to part 1.
inline Partition parse_inline_partition(const std::string& text, int parts, std::size_t n) {
  std::vector<int> part(n, 1);
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("partition item '" + item + "' lacks ':'");
    std::string vs = item.substr(0, colon);
    if (!vs.empty() && vs.front() == 'v') vs.erase(0, 1);
    std::size_t v = 0;
    int p = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(vs, &used);
      if (used != vs.size()) throw std::invalid_argument(vs);
      std::string ps = item.substr(colon + 1);
      p = std::stoi(ps, &used);
      if (used != ps.size()) throw std::invalid_argument(ps);
    } catch (const std::logic_error&) {
      throw InputError("malformed partition item '" + item + "'");
    }
    if (v >= n) throw IndexOutOfRange(v, n);
    part[v] = p;
  }
  return {parts, std::move(part)};
}

/// Partition file: "k <K>" then lines "p <vertex> <part>"; '#' comments.
/// Unlisted vertices default to part 1.
inline Partition parse_partition_file(std::istream& in, std::size_t n) {
  std::optional<int> parts;
  std::vector<int> part(n, 1);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto words = detail::split_words(line);
    if (words.empty() || words.front().front() == '#') continue;
    if (!parts) {
      if (words.size() != 2 || words[0] != "k") throw SyntaxError(line_no, "expected 'k <K>'");
      parts = static_cast<int>(detail::parse_index(words[1], line_no));
      continue;
    }
    if (words.size() != 3 || words[0] != "p")
      throw SyntaxError(line_no, "expected 'p <vertex> <part>'");
    Vertex v = detail::parse_index(words[1], line_no);
    if (v >= n) throw IndexOutOfRange(v, n);
    part[v] = static_cast<int>(detail::parse_index(words[2], line_no));
  }
  if (!parts) throw SyntaxError(line_no, "missing 'k <K>' declaration");
  return {*parts, std::move(part)};
}

inline void write_partition(std::ostream& out, const Partition& p) {
  out << "k " << p.parts() << '\n';
  for (Vertex v = 0; v < p.size(); ++v) out << "p " << v << ' ' << p[v] << '\n';
}

/// An edge or arc breaking admissibility, with the parts of its endpoints.
struct Violation {
  Pair pair;  // arc: from -> to; undirected edge: u < v
  bool is_arc = false;
  int part_u = 0;
  int part_v = 0;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<Violation> violations;
};

inline std::string describe(const Violation& x) {
  std::ostringstream s;
  s << (x.is_arc ? "arc " : "edge ") << x.pair.u << (x.is_arc ? "->" : "-") << x.pair.v
    << " of type (" << x.part_u << ", " << x.part_v << ")";
  return s.str();
}

inline std::string describe(const std::vector<Violation>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : "; ") + describe(x);
  return out;
}

namespace detail {

inline void check_partition(const MixedGraph& g, const Partition& p, RootParameter k) {
  if (p.parts() != k.value())
    throw PartitionMismatch("partition has " + std::to_string(p.parts()) + " parts but k = " +
                            std::to_string(k.value()));
  if (p.size() != g.order())
    throw PartitionMismatch("partition covers " + std::to_string(p.size()) +
                            " vertices, graph has " + std::to_string(g.order()));
}

}  // namespace detail

/// An undirected edge between parts i and j is admissible when j - i is
/// 0 or +-1 (mod k); an arc from part i to part j when i - j is 0, 1 or 2.
inline AdmissibilityReport is_admissible(const MixedGraph& g, const Partition& p, RootParameter k) {
  detail::check_partition(g, p, k);
  AdmissibilityReport report;
  for (auto [u, v] : g.edges()) {
    int d = k.reduce(p[v] - p[u]);
    if (d != 0 && d != 1 && d != k.reduce(-1))
      report.violations.push_back({{u, v}, false, p[u], p[v]});
  }
  for (auto [u, v] : g.arcs()) {
    int d = k.reduce(p[u] - p[v]);
    if (d != 0 && d != 1 && d != 2) report.violations.push_back({{u, v}, true, p[u], p[v]});
  }
  report.admissible = report.violations.empty();
  return report;
}

/// Three-way switching with respect to an admissible partition:
/// an undirected edge u-v with p(v) - p(u) = 1 becomes the arc u->v; an arc
/// u->v with p(u) - p(v) = 1 becomes undirected; an arc with p(u) - p(v) = 2
/// is reversed. Everything else is kept.
///
/// Equivalently the gain of every ordered pair (u, v) shifts by
/// p(v) - p(u), which is the similarity D^-1 H D with D = diag(omega^(p-1)).
inline MixedGraph three_way_switch(const MixedGraph& g, const Partition& p, RootParameter k) {
  auto report = is_admissible(g, p, k);
  if (!report.admissible)
    throw NotAdmissible("partition is not admissible: " + describe(report.violations));

  MixedGraph out(g.order());
  for (auto [u, v] : g.edges()) {
    int d = k.reduce(p[v] - p[u]);
    if (d == 0)
      out.add_edge(u, v);
    else if (d == 1)
      out.add_arc(u, v);
    else
      out.add_arc(v, u);
  }
  for (auto [u, v] : g.arcs()) {
    int d = k.reduce(p[u] - p[v]);
    if (d == 0)
      out.add_arc(u, v);
    else if (d == 1)
      out.add_edge(u, v);
    else
      out.add_arc(v, u);
  }
  return out;
}

/// Two-way switching for a bipartition V1 | V2 (parts 1 and 2): every arc
/// from V1 to V2 becomes undirected and every undirected edge across the cut
/// becomes an arc from V2 to V1. Arcs from V2 to V1 are forbidden.
inline MixedGraph two_way_switch(const MixedGraph& g, const Partition& p) {
  if (p.parts() != 2) throw PartitionMismatch("two-way switching needs exactly two parts");
  if (p.size() != g.order())
    throw PartitionMismatch("partition covers " + std::to_string(p.size()) +
                            " vertices, graph has " + std::to_string(g.order()));
  for (auto [u, v] : g.arcs())
    if (p[u] == 2 && p[v] == 1) throw ForbiddenArc(u, v);

  MixedGraph out(g.order());
  for (auto [u, v] : g.edges()) {
    if (p[u] == p[v])
      out.add_edge(u, v);
    else if (p[u] == 2)
      out.add_arc(u, v);
    else
      out.add_arc(v, u);
  }
  for (auto [u, v] : g.arcs()) {
    if (p[u] == p[v])
      out.add_arc(u, v);
    else
      out.add_edge(u, v);
  }
  return out;
}

struct SimilarityCheck {
  bool similar = true;
  std::optional<Pair> mismatch;  // first ordered pair (row-major) that differs
};

/// Exact test of H(g2) = D^-1 H(g) D with D = diag(omega^(p(v)-1)): for
/// every ordered pair, gain2(u,v) = gain(u,v) + p(v) - p(u) mod k, and
/// absent entries stay absent.
inline SimilarityCheck verify_similarity(const MixedGraph& g, const MixedGraph& g2,
                                         const Partition& p, RootParameter k) {
  detail::check_partition(g, p, k);
  if (g2.order() != g.order()) return {false, std::nullopt};
  const auto a = gain_matrix(g, k);
  const auto b = gain_matrix(g2, k);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto& x = a(u, v);
      const auto& y = b(u, v);
      bool ok = x.has_value() == y.has_value() &&
                (!x || k.reduce(static_cast<long long>(*x) + p[v] - p[u]) == *y);
      if (!ok) return {false, Pair{u, v}};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Bounded search for switching equivalence
// ---------------------------------------------------------------------------

struct ConverseMove {
  friend bool operator==(const ConverseMove&, const ConverseMove&) = default;
};
struct ThreeWayMove {
  Partition partition;
  friend bool operator==(const ThreeWayMove&, const ThreeWayMove&) = default;
};
using SwitchMove = std::variant<ConverseMove, ThreeWayMove>;

inline MixedGraph apply_move(const MixedGraph& g, const SwitchMove& move, RootParameter k) {
  if (const auto* tw = std::get_if<ThreeWayMove>(&move)) return three_way_switch(g, tw->partition, k);
  return converse(g);
}

enum class SearchVerdict { Equivalent, NotEquivalent, Unknown };

inline const char* to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::Equivalent: return "equivalent";
    case SearchVerdict::NotEquivalent: return "not-equivalent";
    case SearchVerdict::Unknown: return "unknown";
  }
  return "?";
}

struct SearchResult {
  SearchVerdict verdict = SearchVerdict::Unknown;
  std::vector<SwitchMove> witness;  // applied in order to the source graph
  std::size_t visited = 0;
  bool rejected_by_invariant = false;
};

inline constexpr std::size_t default_search_budget = 100'000;

struct SearchOptions {
  std::size_t budget = default_search_budget;
  // Skip the search when the cycle weights already rule out equivalence.
  bool use_cycle_filter = true;
  std::size_t cycle_cap = default_cycle_cap;
};

namespace detail {

// Switching keeps every cycle weight; converse negates all of them.
inline bool cycle_weights_compatible(const MixedGraph& a, const MixedGraph& b, RootParameter k,
                                     std::size_t cycle_cap) {
  const auto ma = gain_matrix(a, k);
  const auto mb = gain_matrix(b, k);
  bool same = true, negated = true;
  for (const auto& c : enumerate_simple_cycles(a, cycle_cap)) {
    int wa = cycle_weight(ma, c);
    int wb = cycle_weight(mb, c);
    same = same && wa == wb;
    negated = negated && k.reduce(-wa) == wb;
    if (!same && !negated) return false;
  }
  return true;
}

// Calls fn for each partition with vertex 0 in part 1; adding a constant to
// every part gives the same rewrite, so this covers every distinct move.
template <typename Fn>
void for_each_rooted_partition(std::size_t n, int k, Fn&& fn) {
  if (n == 0) {
    fn(Partition(k, {}));
    return;
  }
  std::vector<int> part(n, 1);
  while (true) {
    fn(Partition(k, part));
    std::size_t i = n - 1;
    while (i >= 1 && part[i] == k) part[i--] = 1;
    if (i == 0) return;
    ++part[i];
  }
}

}  // namespace detail

/// Breadth-first search from `source` over three-way switchings and
/// converse. Returns Equivalent with a witness, NotEquivalent once the
/// reachable set is exhausted, or Unknown when the budget of visited graphs
/// runs out.
inline SearchResult switching_equivalent_search(const MixedGraph& source, const MixedGraph& target,
                                                RootParameter k, const SearchOptions& opts = {}) {
  if (!same_underlying(source, target)) throw UnderlyingMismatch();
  SearchResult result;
  if (source == target) {
    result.verdict = SearchVerdict::Equivalent;
    result.visited = 1;
    return result;
  }
  if (opts.use_cycle_filter && !detail::cycle_weights_compatible(source, target, k, opts.cycle_cap)) {
    result.verdict = SearchVerdict::NotEquivalent;
    result.rejected_by_invariant = true;
    return result;
  }

  struct Origin {
    const MixedGraph* parent;
    std::optional<SwitchMove> move;
  };
  std::map<MixedGraph, Origin> seen;
  std::deque<const MixedGraph*> frontier;
  auto root = seen.emplace(source, Origin{nullptr, std::nullopt}).first;
  frontier.push_back(&root->first);

  auto trace_back = [&](const MixedGraph* node) {
    std::vector<SwitchMove> moves;
    for (const MixedGraph* at = node; at;) {
      const Origin& o = seen.at(*at);
      if (!o.move) break;
      moves.push_back(*o.move);
      at = o.parent;
    }
    return std::vector<SwitchMove>(moves.rbegin(), moves.rend());
  };

  while (!frontier.empty()) {
    const MixedGraph* node = frontier.front();
    frontier.pop_front();

    std::optional<SearchVerdict> stop;
    const MixedGraph* found = nullptr;
    auto visit = [&](MixedGraph next, SwitchMove move) {
      if (stop) return;
      if (seen.count(next)) return;
      if (seen.size() >= opts.budget) {
        stop = SearchVerdict::Unknown;
        return;
      }
      auto it = seen.emplace(std::move(next), Origin{node, std::move(move)}).first;
      if (it->first == target) {
        stop = SearchVerdict::Equivalent;
        found = &it->first;
        return;
      }
      frontier.push_back(&it->first);
    };

    visit(converse(*node), ConverseMove{});
    detail::for_each_rooted_partition(node->order(), k.value(), [&](Partition p) {
      if (stop || !is_admissible(*node, p, k).admissible) return;
      MixedGraph next = three_way_switch(*node, p, k);
      visit(std::move(next), ThreeWayMove{std::move(p)});
    });

    if (stop) {
      result.verdict = *stop;
      result.visited = seen.size();
      if (found) result.witness = trace_back(found);
      return result;
    }
  }
  result.verdict = SearchVerdict::NotEquivalent;
  result.visited = seen.size();
  return result;
}

}  // namespace hermix
