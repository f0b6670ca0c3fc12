#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hermix/errors.hpp"

namespace hermix {

using Vertex = std::size_t;

/// Ordered vertex pair. For undirected edges `u < v` always holds; for arcs
/// the pair reads `u -> v`.
struct Pair {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Pair&) const = default;
};

/// How a neighbor w is joined to a vertex v.
enum class Link : unsigned char {
  Undirected,  // {v, w}
  Out,         // v -> w
  In,          // w -> v
};

struct Neighbor {
  Vertex vertex;
  Link link;
};

/// N0 / N+ / N- of a vertex: undirected neighbors, heads of out-arcs, tails
/// of in-arcs.
struct NeighborClasses {
  std::vector<Vertex> n0;
  std::vector<Vertex> n_plus;
  std::vector<Vertex> n_minus;
};

/// Graph with undirected edges and arcs over vertices 0..n-1 whose
/// underlying graph is simple.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(std::size_t n) : adjacency_(n) {}

  MixedGraph(std::size_t n, const std::vector<Pair>& undirected, const std::vector<Pair>& arcs)
      : adjacency_(n) {
    for (auto [u, v] : undirected) add_edge(u, v);
    for (auto [u, v] : arcs) add_arc(u, v);
  }

  void add_edge(Vertex u, Vertex v) {
    check_new_pair(u, v);
    edges_.insert(Pair{std::min(u, v), std::max(u, v)});
    adjacency_[u].push_back({v, Link::Undirected});
    adjacency_[v].push_back({u, Link::Undirected});
  }

  void add_arc(Vertex from, Vertex to) {
    check_new_pair(from, to);
    arcs_.insert(Pair{from, to});
    adjacency_[from].push_back({to, Link::Out});
    adjacency_[to].push_back({from, Link::In});
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size() + arcs_.size(); }

  const std::set<Pair>& edges() const noexcept { return edges_; }
  const std::set<Pair>& arcs() const noexcept { return arcs_; }

  /// Neighbors in insertion order.
  const std::vector<Neighbor>& neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  /// The link joining u to v as seen from u, if any.
  std::optional<Link> link(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    for (const auto& nb : adjacency_[u])
      if (nb.vertex == v) return nb.link;
    return std::nullopt;
  }

  bool adjacent(Vertex u, Vertex v) const { return link(u, v).has_value(); }

  void check_vertex(Vertex v) const {
    if (v >= order()) throw IndexOutOfRange(v, order());
  }

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_ && a.arcs_ == b.arcs_;
  }

  /// Total order on (n, sorted edges, sorted arcs); used as a canonical key.
  friend bool operator<(const MixedGraph& a, const MixedGraph& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::tie(a.edges_, a.arcs_) < std::tie(b.edges_, b.arcs_);
  }

 private:
  void check_new_pair(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw SelfLoop(u);
    if (adjacent(u, v)) throw DuplicatePair(std::min(u, v), std::max(u, v));
  }

  std::vector<std::vector<Neighbor>> adjacency_;
  std::set<Pair> edges_;
  std::set<Pair> arcs_;
};

inline NeighborClasses neighbor_classes(const MixedGraph& g, Vertex v) {
  NeighborClasses out;
  for (const auto& nb : g.neighbors(v)) {
    switch (nb.link) {
      case Link::Undirected: out.n0.push_back(nb.vertex); break;
      case Link::Out: out.n_plus.push_back(nb.vertex); break;
      case Link::In: out.n_minus.push_back(nb.vertex); break;
    }
  }
  std::sort(out.n0.begin(), out.n0.end());
  std::sort(out.n_plus.begin(), out.n_plus.end());
  std::sort(out.n_minus.begin(), out.n_minus.end());
  return out;
}

/// Degree in the underlying graph.
inline std::size_t degree(const MixedGraph& g, Vertex v) { return g.neighbors(v).size(); }

inline std::size_t max_degree(const MixedGraph& g) {
  std::size_t delta = 0;
  for (Vertex v = 0; v < g.order(); ++v) delta = std::max(delta, degree(g, v));
  return delta;
}

inline bool is_regular(const MixedGraph& g) {
  const std::size_t delta = max_degree(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (degree(g, v) != delta) return false;
  return true;
}

/// Component index per vertex, components numbered by smallest vertex.
inline std::vector<std::size_t> component_labels(const MixedGraph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.order(), unset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (label[root] != unset) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(v)) {
        if (label[nb.vertex] == unset) {
          label[nb.vertex] = next;
          stack.push_back(nb.vertex);
        }
      }
    }
    ++next;
  }
  return label;
}

/// Connectivity of the underlying graph. The empty graph counts as connected.
inline bool is_connected(const MixedGraph& g) {
  auto labels = component_labels(g);
  return std::all_of(labels.begin(), labels.end(), [](std::size_t c) { return c == 0; });
}

/// Reverses every arc.
inline MixedGraph converse(const MixedGraph& g) {
  MixedGraph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : g.arcs()) out.add_arc(v, u);
  return out;
}

/// Forgets every direction.
inline MixedGraph underlying(const MixedGraph& g) {
  MixedGraph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : g.arcs()) out.add_edge(u, v);
  return out;
}

/// Sorted {min, max} pairs of the underlying graph.
inline std::vector<Pair> underlying_pairs(const MixedGraph& g) {
  std::vector<Pair> out(g.edges().begin(), g.edges().end());
  for (auto [u, v] : g.arcs()) out.push_back({std::min(u, v), std::max(u, v)});
  std::sort(out.begin(), out.end());
  return out;
}

inline bool same_underlying(const MixedGraph& a, const MixedGraph& b) {
  return a.order() == b.order() && underlying_pairs(a) == underlying_pairs(b);
}

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   n <N>
//   e <u> <v>     undirected edge
//   a <u> <v>     arc u -> v
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

inline std::size_t parse_index(const std::string& word, std::size_t line) {
  if (word.empty() || !std::all_of(word.begin(), word.end(),
                                   [](unsigned char c) { return c >= '0' && c <= '9'; }))
    throw SyntaxError(line, "expected a non-negative integer, got '" + word + "'");
  try {
    return static_cast<std::size_t>(std::stoull(word));
  } catch (const std::out_of_range&) {
    throw SyntaxError(line, "integer too large: '" + word + "'");
  }
}

}  // namespace detail

inline constexpr std::size_t max_parsed_order = 1'000'000;

inline MixedGraph parse_graph(std::istream& in) {
  std::optional<MixedGraph> g;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto words = detail::split_words(line);
    if (words.empty() || words.front().front() == '#') continue;
    const std::string& tag = words.front();
    if (!g) {
      if (tag != "n" || words.size() != 2)
        throw SyntaxError(line_no, "expected 'n <N>' as first declaration");
      std::size_t n = detail::parse_index(words[1], line_no);
      if (n > max_parsed_order) throw SyntaxError(line_no, "vertex count exceeds " + std::to_string(max_parsed_order));
      g.emplace(n);
      continue;
    }
    if ((tag != "e" && tag != "a") || words.size() != 3)
      throw SyntaxError(line_no, "expected 'e <u> <v>' or 'a <u> <v>'");
    Vertex u = detail::parse_index(words[1], line_no);
    Vertex v = detail::parse_index(words[2], line_no);
    if (tag == "e")
      g->add_edge(u, v);
    else
      g->add_arc(u, v);
  }
  if (!g) throw SyntaxError(line_no, "missing 'n <N>' declaration");
  return std::move(*g);
}

inline MixedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline void write_graph(std::ostream& out, const MixedGraph& g) {
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  for (auto [u, v] : g.arcs()) out << "a " << u << ' ' << v << '\n';
}

inline std::string serialize_graph(const MixedGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

inline std::ostream& operator<<(std::ostream& out, const MixedGraph& g) {
  write_graph(out, g);
  return out;
}

// Small named families, used by tests, sweeps and the CLI.
namespace families {

inline MixedGraph path(std::size_t n) {
  MixedGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline MixedGraph cycle(std::size_t n) {
  MixedGraph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

/// 0 -> 1 -> ... -> n-1 -> 0.
inline MixedGraph directed_cycle(std::size_t n) {
  MixedGraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_arc(v, (v + 1) % n);
  return g;
}

inline MixedGraph complete(std::size_t n) {
  MixedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline MixedGraph complete_bipartite(std::size_t a, std::size_t b) {
  MixedGraph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

inline MixedGraph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

}  // namespace families

}  // namespace hermix
