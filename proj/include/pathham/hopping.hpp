#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pathham/graph.hpp"

namespace pathham {

// Alternating closure around an off-cycle vertex v0:
//   Y_0 = {},  X_j = N(Y_{j-1} u {v0}),  Y_j = { c on the cycle : both cycle
//   neighbors of c lie in X_j },  iterated to a fixed point.
// The trace keeps every (X_j, Y_j) snapshot including the final confirming
// recomputation, so its last two entries are always equal; `iterations`
// counts the steps before that confirmation.
struct HoppingClosure {
  VertexSet X, Y;
  std::vector<std::pair<VertexSet, VertexSet>> trace;

  int x() const { return X.count(); }
  int y() const { return Y.count(); }
  int iterations() const { return static_cast<int>(trace.size()) - 1; }
};

// Requires: c1 a cycle of g1, v0 off the cycle, and every neighbor of v0 on
// the cycle (v0 isolated in g1 - C1). Throws std::invalid_argument otherwise.
HoppingClosure compute_closure(const Graph& g1, const Cycle& c1, int v0);

// The three structural properties promised for closures taken around a
// longest cycle. Violations are report content, not errors; each carries a
// witness. Establishing that c1 really is a longest cycle is the caller's
// job.
struct HoppingReport {
  bool x_on_cycle = false;
  std::optional<int> off_cycle_witness;
  bool xy_disjoint = false;
  std::optional<int> overlap_witness;
  bool no_consecutive_pair = false;
  std::optional<std::pair<int, int>> consecutive_witness;

  bool all_hold() const { return x_on_cycle && xy_disjoint && no_consecutive_pair; }
};
HoppingReport check_hopping_invariants(const Graph& g1, const Cycle& c1, int v0,
                                       const HoppingClosure& closure);

}  // namespace pathham
