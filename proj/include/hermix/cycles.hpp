#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hermix/errors.hpp"
#include "hermix/graph.hpp"

namespace hermix {

using Cycle = std::vector<Vertex>;

inline constexpr std::size_t default_cycle_cap = 1'000'000;

/// All simple cycles of the underlying graph, each once up to rotation and
/// reflection. A cycle is reported starting at its smallest vertex, followed
/// by the smaller of that vertex's two cycle neighbors. Output is ordered by
/// root, then by depth-first discovery.
inline std::vector<Cycle> enumerate_simple_cycles(const MixedGraph& g,
                                                  std::size_t cap = default_cycle_cap) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& nb : g.neighbors(v)) adj[v].push_back(nb.vertex);
    std::sort(adj[v].begin(), adj[v].end());
  }

  std::vector<Cycle> cycles;
  std::vector<char> on_path(n, 0);
  Cycle path;

  // Iterative DFS: each frame remembers the next adjacency slot to try.
  std::vector<std::size_t> cursor;
  for (Vertex root = 0; root < n; ++root) {
    path.assign(1, root);
    cursor.assign(1, 0);
    on_path[root] = 1;
    while (!path.empty()) {
      const Vertex top = path.back();
      std::size_t& slot = cursor.back();
      if (slot == adj[top].size()) {
        on_path[top] = 0;
        path.pop_back();
        cursor.pop_back();
        continue;
      }
      const Vertex next = adj[top][slot++];
      if (next == root) {
        if (path.size() >= 3 && path[1] < path.back()) {
          if (cycles.size() == cap) throw CycleBudgetExceeded(cap);
          cycles.push_back(path);
        }
        continue;
      }
      if (next < root || on_path[next]) continue;
      on_path[next] = 1;
      path.push_back(next);
      cursor.push_back(0);
    }
  }
  return cycles;
}

}  // namespace hermix
