#include "pathham/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "pathham/graph6.hpp"

namespace pathham {

namespace {

constexpr std::uint16_t kNoColumn = 0xFFFF;

// Branch-and-bound over vertex permutations, minimizing the upper-triangle
// bit string in column order. Column j (j bits, MSB = adjacency to position
// 0) is compared numerically, which matches lexicographic string order.
//
// Two exact prunes keep highly symmetric graphs tractable:
//  * at each level only candidates achieving the minimal column are
//    descended — a larger column from the same prefix is dominated by any
//    completion of the minimal one;
//  * interchangeable twins (N(u)\{w} == N(w)\{u}, i.e. the transposition
//    (u w) is an automorphism) are descended only once per level.
struct CanonSearch {
  int n = 0;
  std::array<std::uint64_t, kCanonicalMaxVertices> adj{};
  std::array<std::uint16_t, kCanonicalMaxVertices> best{};
  std::array<int, kCanonicalMaxVertices> best_perm{};
  std::array<std::uint16_t, kCanonicalMaxVertices> ident{};
  std::array<int, kCanonicalMaxVertices> perm{};
  std::uint64_t used = 0;

  void load(const Graph& g) {
    n = g.vertex_count();
    if (n > kCanonicalMaxVertices)
      throw std::invalid_argument("canonical form is capped at 12 vertices");
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).bits();
    for (int j = 0; j < n; ++j) {
      std::uint16_t col = 0;
      for (int i = 0; i < j; ++i) col = static_cast<std::uint16_t>((col << 1) | ((adj[j] >> i) & 1));
      ident[j] = col;
    }
  }

  std::uint16_t column(int w, int level) const {
    std::uint16_t col = 0;
    for (int i = 0; i < level; ++i)
      col = static_cast<std::uint16_t>((col << 1) | ((adj[w] >> perm[i]) & 1));
    return col;
  }

  bool twins(int u, int w) const {
    const std::uint64_t both = (std::uint64_t{1} << u) | (std::uint64_t{1} << w);
    return (adj[u] | both) == (adj[w] | both);
  }

  // minimization: on entry the current columns equal best[0..level-1]
  void minimize(int level) {
    if (level == n) {
      best_perm = perm;
      return;
    }
    std::uint16_t m0 = kNoColumn;
    for (int w = 0; w < n; ++w)
      if (!((used >> w) & 1)) m0 = std::min(m0, column(w, level));
    if (m0 > best[level]) return;
    if (m0 < best[level]) {
      best[level] = m0;
      for (int j = level + 1; j < n; ++j) best[j] = kNoColumn;
    }
    std::uint64_t tried = 0;
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1) continue;
      if (column(w, level) != m0) continue;
      bool skip = false;
      for (std::uint64_t rest = tried; rest != 0; rest &= rest - 1)
        if (twins(std::countr_zero(rest), w)) {
          skip = true;
          break;
        }
      if (skip) continue;
      used |= std::uint64_t{1} << w;
      perm[level] = w;
      minimize(level + 1);
      used &= ~(std::uint64_t{1} << w);
      tried |= std::uint64_t{1} << w;
    }
  }

  // identity-minimality test: true when some permutation beats the identity
  bool smaller_exists(int level) {
    if (level == n) return false;  // reached only along equal strings
    std::uint16_t m0 = kNoColumn;
    for (int w = 0; w < n; ++w)
      if (!((used >> w) & 1)) m0 = std::min(m0, column(w, level));
    if (m0 > ident[level]) return false;
    if (m0 < ident[level]) return true;
    std::uint64_t tried = 0;
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1) continue;
      if (column(w, level) != m0) continue;
      bool skip = false;
      for (std::uint64_t rest = tried; rest != 0; rest &= rest - 1)
        if (twins(std::countr_zero(rest), w)) {
          skip = true;
          break;
        }
      if (skip) continue;
      used |= std::uint64_t{1} << w;
      perm[level] = w;
      const bool smaller = smaller_exists(level + 1);
      used &= ~(std::uint64_t{1} << w);
      if (smaller) return true;
      tried |= std::uint64_t{1} << w;
    }
    return false;
  }
};

}  // namespace

Graph canonical_relabel(const Graph& g) {
  CanonSearch cs;
  cs.load(g);
  cs.best = cs.ident;  // identity labeling is a real achievable string
  for (int i = 0; i < cs.n; ++i) cs.best_perm[i] = i;
  cs.minimize(0);
  Graph h(cs.n);
  for (int i = 0; i < cs.n; ++i)
    for (int j = i + 1; j < cs.n; ++j)
      if (g.has_edge(cs.best_perm[i], cs.best_perm[j])) h.add_edge(i, j);
  return h;
}

CanonicalForm canonical_form(const Graph& g) { return CanonicalForm{emit_graph6(canonical_relabel(g))}; }

bool is_canonical_labeling(const Graph& g) {
  CanonSearch cs;
  cs.load(g);
  return !cs.smaller_exists(0);
}

namespace {

// Deficiency feasibility for extending a partial graph on m vertices to a
// k-regular graph on n. All conditions hold for every prefix of a real
// k-regular graph, so pruning on them is safe.
bool regular_feasible(const Graph& g, int k, int n) {
  const int m = g.vertex_count();
  const int r = n - m;
  int total_def = 0;
  for (int v = 0; v < m; ++v) {
    const int def = k - g.degree(v);
    if (def < 0 || def > r) return false;
    total_def += def;
  }
  const int internal = r * k - total_def;  // twice the future internal edge count
  if (internal < 0 || internal % 2 != 0) return false;
  if (internal > r * (r - 1)) return false;
  return true;
}

void extend_regular(const Graph& g, int k, int n, bool two_connected, std::vector<Graph>& out) {
  const int m = g.vertex_count();
  if (m == n) {
    if (is_k_regular(g, k) && (!two_connected || is_2_connected(g))) out.push_back(g);
    return;
  }
  const int r = n - m;  // vertices still to add, including the one added now
  std::uint64_t eligible = 0, forced = 0;
  for (int v = 0; v < m; ++v) {
    const int def = k - g.degree(v);
    if (def > 0) eligible |= std::uint64_t{1} << v;
    if (def == r) forced |= std::uint64_t{1} << v;  // must attach now or never completes
  }
  const int min_size = std::max(0, k - (r - 1));
  const std::uint64_t free_mask = eligible & ~forced;
  for (std::uint64_t s = 0;; s = (s - free_mask) & free_mask) {
    const std::uint64_t take = s | forced;
    const int sz = std::popcount(take);
    if (sz >= min_size && sz <= k) {
      Graph child(m + 1);
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          if (g.has_edge(a, b)) child.add_edge(a, b);
      for (std::uint64_t rest = take; rest != 0; rest &= rest - 1)
        child.add_edge(std::countr_zero(rest), m);
      if (regular_feasible(child, k, n) && is_canonical_labeling(child))
        extend_regular(child, k, n, two_connected, out);
    }
    if (s == free_mask) break;
  }
}

}  // namespace

std::vector<Graph> enumerate_regular_graphs(int k, int n, bool require_2_connected) {
  if (n < 3 || n > kCanonicalMaxVertices)
    throw std::invalid_argument("enumeration supports 3 <= n <= 12");
  if (k < 2) throw std::invalid_argument("enumeration supports k >= 2");
  if (k >= n || (n * k) % 2 != 0) return {};
  std::vector<Graph> out;
  extend_regular(Graph(1), k, n, require_2_connected, out);
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return emit_graph6(a) < emit_graph6(b); });
  return out;
}

std::vector<int> theorem_range_orders(int k) {
  if (k < 3 || k > 5) throw std::invalid_argument("sweeps support 3 <= k <= 5");
  std::vector<int> orders;
  for (int n = 2 * k - 2; n <= 2 * k + 2; ++n)
    if ((n * k) % 2 == 0 && n > k) orders.push_back(n);
  return orders;
}

std::vector<TheoremRangeCell> enumerate_theorem_range(int k) {
  std::vector<TheoremRangeCell> cells;
  for (int n : theorem_range_orders(k))
    cells.push_back({n, enumerate_regular_graphs(k, n, true)});
  return cells;
}

std::vector<Graph> enumerate_all_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("all-graph enumeration supports n <= 8");
  std::vector<Graph> cur{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& g : cur) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << (m - 1)); ++s) {
        Graph h(m);
        for (int a = 0; a < m - 1; ++a)
          for (int b = a + 1; b < m - 1; ++b)
            if (g.has_edge(a, b)) h.add_edge(a, b);
        for (std::uint64_t rest = s; rest != 0; rest &= rest - 1)
          h.add_edge(std::countr_zero(rest), m - 1);
        Graph c = canonical_relabel(h);
        if (seen.insert(emit_graph6(c)).second) next.push_back(std::move(c));
      }
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(),
            [](const Graph& a, const Graph& b) { return emit_graph6(a) < emit_graph6(b); });
  return cur;
}

}  // namespace pathham
