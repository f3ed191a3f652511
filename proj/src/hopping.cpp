#include "pathham/hopping.hpp"

#include <stdexcept>

namespace pathham {

HoppingClosure compute_closure(const Graph& g1, const Cycle& c1, int v0) {
  const Cycle cyc = Cycle::in_graph(g1, c1.verts());  // revalidate against g1
  const int n = g1.vertex_count();
  if (v0 < 0 || v0 >= n) throw std::out_of_range("v0 out of range");
  const VertexSet on_cycle = cyc.vertex_set();
  if (on_cycle.contains(v0)) throw std::invalid_argument("v0 lies on the cycle");
  if (!g1.neighbors(v0).subset_of(on_cycle))
    throw std::invalid_argument("v0 has a neighbor off the cycle");

  const auto& order = cyc.verts();
  const int m = cyc.size();
  HoppingClosure hc;
  VertexSet y_prev;
  // X grows monotonically, so the fixed point lands within n steps; the +2
  // guard can only fire on a logic bug.
  for (int guard = 0; guard < n + 2; ++guard) {
    VertexSet x;
    for (int w : (y_prev | VertexSet::of({v0}))) x = x | g1.neighbors(w);
    VertexSet y;
    for (int i = 0; i < m; ++i) {
      const int prev = order[(i + m - 1) % m];
      const int next = order[(i + 1) % m];
      if (x.contains(prev) && x.contains(next)) y.add(order[i]);
    }
    hc.trace.emplace_back(x, y);
    const std::size_t t = hc.trace.size();
    if (t >= 2 && hc.trace[t - 1] == hc.trace[t - 2]) {
      hc.X = x;
      hc.Y = y;
      return hc;
    }
    y_prev = y;
  }
  throw std::logic_error("hopping closure failed to stabilize");
}

HoppingReport check_hopping_invariants(const Graph& g1, const Cycle& c1, int v0,
                                       const HoppingClosure& closure) {
  const Cycle cyc = Cycle::in_graph(g1, c1.verts());
  (void)v0;
  HoppingReport rep;
  const VertexSet on_cycle = cyc.vertex_set();

  const VertexSet off = closure.X - on_cycle;
  rep.x_on_cycle = off.empty();
  if (!rep.x_on_cycle) rep.off_cycle_witness = off.lowest();

  const VertexSet overlap = closure.X & closure.Y;
  rep.xy_disjoint = overlap.empty();
  if (!rep.xy_disjoint) rep.overlap_witness = overlap.lowest();

  rep.no_consecutive_pair = true;
  const auto& order = cyc.verts();
  const int m = cyc.size();
  for (int i = 0; i < m; ++i) {
    const int a = order[i], b = order[(i + 1) % m];
    if (closure.X.contains(a) && closure.X.contains(b)) {
      rep.no_consecutive_pair = false;
      rep.consecutive_witness = {a, b};
      break;
    }
  }
  return rep;
}

}  // namespace pathham
