#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pathham/graph.hpp"

namespace pathham {

// Upper bound for the exhaustive cycle oracle (desk-scale only).
inline constexpr int kOracleMaxVertices = 16;

// Deterministic backtracking search. Returns the first Hamiltonian cycle
// found under the fixed branching rule, or nullopt when none exists.
// Requires n >= 3.
std::optional<Cycle> find_hamiltonian_cycle(const Graph& g);

// Hamiltonian cycle traversing p's edges consecutively, found by seeding the
// search with p itself (its interior is closed to other edges). Requires
// 1 <= p.length() <= n-2.
std::optional<Cycle> find_ham_cycle_containing_path(const Graph& g, const Path& p);

// Every Hamiltonian cycle of g, canonical and sorted. Naive enumeration with
// no pruning beyond adjacency — kept independent of the production solver so
// it can serve as its oracle. Requires n <= kOracleMaxVertices.
std::vector<Cycle> enumerate_all_ham_cycles(const Graph& g);

// G1: both edges of the 2-path p = u-v-z replaced by paths through fresh
// degree-2 vertices w1, w2 (u-w1-v and v-w2-z). Cycles of g through p
// correspond exactly to cycles of g1 through w1 and w2; in particular g has a
// Hamiltonian cycle containing p iff g1 is Hamiltonian.
struct SubdividedGraph {
  Graph g1;
  int w1 = 0;
  int w2 = 0;
  std::array<int, 3> source_path{};  // u, v, z in the source graph's labels
  std::vector<int> origin_map;       // g1 vertex -> source vertex, -1 for w1/w2

  // Undo the subdivision; recovers the source graph exactly.
  Graph contract() const;
};
SubdividedGraph build_g1(const Graph& g, const Path& p);

struct PathCoverage {
  bool holds = false;
  std::optional<Path> first_failure;  // shortest, then lexicographically first
};
// True when every path of length 1..l lies in some Hamiltonian cycle.
// Requires 1 <= l <= n-2.
PathCoverage is_l_path_hamiltonian(const Graph& g, int l);

// All endpoint-normalized simple paths with exactly `length` edges, sorted.
// Requires 1 <= length <= n-1.
std::vector<Path> enumerate_paths(const Graph& g, int length);

}  // namespace pathham
