#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pathham/graph.hpp"

namespace pathham {

inline constexpr int kCanonicalMaxVertices = 12;

// Canonical form: the graph6 line of the relabeling whose upper-triangle
// adjacency bit string (column order) is lexicographically minimal over all
// vertex permutations. Two graphs have equal forms iff they are isomorphic.
struct CanonicalForm {
  std::string g6;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Requires n <= kCanonicalMaxVertices.
CanonicalForm canonical_form(const Graph& g);
Graph canonical_relabel(const Graph& g);
// True when g's own labeling is already the minimal one (faster than a full
// relabeling; used by the orderly generator).
bool is_canonical_labeling(const Graph& g);

// All k-regular graphs on n vertices up to isomorphism, minimal-labeled and
// sorted by canonical form. Orderly generation: grow one vertex at a time,
// keep only canonically-labeled extensions. Empty (not an error) when the
// parity n*k is odd or k >= n. Requires 3 <= n <= 12 and k >= 2.
std::vector<Graph> enumerate_regular_graphs(int k, int n, bool require_2_connected);

// Feasible orders 2k-2 .. 2k+2 for the verification sweeps (odd n*k skipped).
std::vector<int> theorem_range_orders(int k);

struct TheoremRangeCell {
  int n = 0;
  std::vector<Graph> graphs;
};
// 2-connected k-regular corpora for every feasible n in 2k-2 .. 2k+2.
// Requires 3 <= k <= 5.
std::vector<TheoremRangeCell> enumerate_theorem_range(int k);

// Every graph on n vertices up to isomorphism (one-vertex augmentation with
// canonical-form dedup). Requires 1 <= n <= 8. Feeds the degree-sum
// cross-check sweeps.
std::vector<Graph> enumerate_all_graphs(int n);

}  // namespace pathham
