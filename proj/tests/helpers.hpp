#pragma once

// Graph builders shared by the test suites. Everything here is deterministic;
// the pseudo-random builders take explicit seeds and use raw mt19937 output so
// results are identical on every platform.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pathham/graph.hpp"

namespace testutil {

inline pathham::Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  pathham::Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline pathham::Graph complete(int n) {
  pathham::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline pathham::Graph cycle_graph(int n) {
  pathham::Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline pathham::Graph path_graph(int n) {
  pathham::Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline pathham::Graph complete_bipartite(int a, int b) {
  pathham::Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

// Outer cycle 0..4, spokes i -- i+5, inner pentagram 5-7-9-6-8.
inline pathham::Graph petersen() {
  pathham::Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Two n-cycles (0..n-1 and n..2n-1) joined by rungs i -- n+i.
inline pathham::Graph prism(int n) {
  pathham::Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + 1) % n);
    g.add_edge(i, n + i);
  }
  return g;
}

// Each pair becomes an edge when the next mt19937 draw clears the threshold.
// `permille` is the edge probability in thousandths.
inline pathham::Graph random_graph(int n, int permille, std::uint32_t seed) {
  if (permille < 0 || permille > 1000) throw std::invalid_argument("permille out of range");
  std::mt19937 rng(seed);
  pathham::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 1000 < static_cast<std::uint32_t>(permille)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint32_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

// Relabel: vertex v of g becomes perm[v].
inline pathham::Graph relabel(const pathham::Graph& g, const std::vector<int>& perm) {
  pathham::Graph h(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace testutil
