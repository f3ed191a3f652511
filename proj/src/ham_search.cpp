#include "pathham/ham_search.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace pathham {

namespace {

// Backtracking over a partial path grown at both ends. Branching: extend the
// endpoint with fewer unvisited neighbors (ties: lower vertex id), trying
// candidates in ascending order — fully deterministic.
class CycleEngine {
 public:
  explicit CycleEngine(const Graph& g) : n_(g.vertex_count()), all_(VertexSet::below(n_).bits()) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).bits();
  }

  std::optional<std::vector<int>> find_covering_cycle(std::span<const int> seed) {
    lo_ = kCenter;
    hi_ = kCenter + static_cast<int>(seed.size()) - 1;
    visited_ = 0;
    for (std::size_t i = 0; i < seed.size(); ++i) {
      buf_[kCenter + static_cast<int>(i)] = seed[i];
      visited_ |= std::uint64_t{1} << seed[i];
    }
    if (search()) return std::vector<int>(buf_.begin() + lo_, buf_.begin() + hi_ + 1);
    return std::nullopt;
  }

 private:
  static constexpr int kCenter = Graph::kMaxVertices;

  bool search() {
    const std::uint64_t remaining = all_ & ~visited_;
    const int a = buf_[lo_];
    const int b = buf_[hi_];
    if (remaining == 0) return hi_ - lo_ + 1 >= 3 && ((adj_[a] >> b) & 1);

    const std::uint64_t ends = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    // every unvisited vertex still needs two usable cycle slots
    for (std::uint64_t rest = remaining; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint64_t avail = adj_[v] & ((remaining & ~(std::uint64_t{1} << v)) | ends);
      if (std::popcount(avail) < 2) return false;
    }
    if (lo_ == hi_ && std::popcount(adj_[a] & remaining) < 2) return false;

    // the unvisited region must be one component touching both frontier ends
    std::uint64_t comp = remaining & (~remaining + 1);
    std::uint64_t touch = 0;
    for (;;) {
      touch = 0;
      for (std::uint64_t rest = comp; rest != 0; rest &= rest - 1)
        touch |= adj_[std::countr_zero(rest)];
      const std::uint64_t grow = comp | (touch & remaining);
      if (grow == comp) break;
      comp = grow;
    }
    if (comp != remaining) return false;
    if (!(touch & (std::uint64_t{1} << a)) || !(touch & (std::uint64_t{1} << b))) return false;

    std::uint64_t cand;
    bool at_front;
    if (lo_ == hi_) {
      cand = adj_[a] & remaining;
      at_front = false;
    } else {
      const std::uint64_t ca = adj_[a] & remaining;
      const std::uint64_t cb = adj_[b] & remaining;
      const int na = std::popcount(ca), nb = std::popcount(cb);
      if (na < nb || (na == nb && a < b)) {
        cand = ca;
        at_front = true;
      } else {
        cand = cb;
        at_front = false;
      }
    }
    for (std::uint64_t rest = cand; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      visited_ |= std::uint64_t{1} << v;
      if (at_front)
        buf_[--lo_] = v;
      else
        buf_[++hi_] = v;
      if (search()) return true;
      if (at_front)
        ++lo_;
      else
        --hi_;
      visited_ &= ~(std::uint64_t{1} << v);
    }
    return false;
  }

  int n_;
  std::uint64_t all_;
  std::array<std::uint64_t, Graph::kMaxVertices> adj_{};
  std::uint64_t visited_ = 0;
  std::array<int, 2 * Graph::kMaxVertices + 2> buf_{};
  int lo_ = 0, hi_ = 0;
};

}  // namespace

std::optional<Cycle> find_hamiltonian_cycle(const Graph& g) {
  if (g.vertex_count() < 3)
    throw std::invalid_argument("hamiltonian cycle needs at least 3 vertices");
  CycleEngine engine(g);
  const int seed[1] = {0};
  if (auto verts = engine.find_covering_cycle(seed)) return Cycle::in_graph(g, *verts);
  return std::nullopt;
}

std::optional<Cycle> find_ham_cycle_containing_path(const Graph& g, const Path& p) {
  const Path checked = Path::in_graph(g, p.verts());  // revalidate against this graph
  if (checked.length() < 1 || checked.length() > g.vertex_count() - 2)
    throw std::invalid_argument("forced path length must be between 1 and n-2");
  CycleEngine engine(g);
  if (auto verts = engine.find_covering_cycle(checked.verts())) {
    Cycle c = Cycle::in_graph(g, *verts);
    if (!c.is_hamiltonian(g) || !c.contains_path(checked))
      throw std::logic_error("witness cycle failed re-verification");
    return c;
  }
  return std::nullopt;
}

std::vector<Cycle> enumerate_all_ham_cycles(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kOracleMaxVertices)
    throw std::invalid_argument("exhaustive cycle oracle is capped at 16 vertices");
  if (n < 3) return {};
  std::set<Cycle> found;
  std::vector<int> path{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == n) {
      if (g.has_edge(path.back(), 0)) found.insert(Cycle::in_graph(g, path));
      return;
    }
    for (int v = 1; v < n; ++v) {
      if (used[v] || !g.has_edge(path.back(), v)) continue;
      used[v] = true;
      path.push_back(v);
      self(self);
      path.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return std::vector<Cycle>(found.begin(), found.end());
}

SubdividedGraph build_g1(const Graph& g, const Path& p) {
  const Path checked = Path::in_graph(g, p.verts());
  if (checked.length() != 2) throw std::invalid_argument("subdivision needs a 2-path");
  const int n = g.vertex_count();
  if (n + 2 > Graph::kMaxVertices)
    throw std::invalid_argument("subdivided graph would exceed 64 vertices");
  const int u = checked.verts()[0], v = checked.verts()[1], z = checked.verts()[2];

  Graph g1(n + 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.has_edge(a, b)) g1.add_edge(a, b);
  g1.remove_edge(u, v);
  g1.remove_edge(v, z);
  const int w1 = n, w2 = n + 1;
  g1.add_edge(u, w1);
  g1.add_edge(w1, v);
  g1.add_edge(v, w2);
  g1.add_edge(w2, z);

  SubdividedGraph out{std::move(g1), w1, w2, {u, v, z}, {}};
  out.origin_map.resize(n + 2, -1);
  for (int i = 0; i < n; ++i) out.origin_map[i] = i;
  out.g1.check_invariants();
  return out;
}

Graph SubdividedGraph::contract() const {
  const int n = g1.vertex_count() - 2;
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g1.has_edge(a, b)) g.add_edge(a, b);
  g.add_edge(source_path[0], source_path[1]);
  g.add_edge(source_path[1], source_path[2]);
  return g;
}

std::vector<Path> enumerate_paths(const Graph& g, int length) {
  const int n = g.vertex_count();
  if (length < 1 || length > n - 1) throw std::invalid_argument("path length out of range");
  std::vector<Path> out;
  std::vector<int> cur;
  VertexSet used;
  auto extend = [&](auto&& self, int v) -> void {
    cur.push_back(v);
    used.add(v);
    if (static_cast<int>(cur.size()) == length + 1) {
      if (cur.front() < cur.back()) out.push_back(Path::in_graph(g, cur));
    } else {
      for (int w : g.neighbors(v))
        if (!used.contains(w)) self(self, w);
    }
    cur.pop_back();
    used.remove(v);
  };
  for (int s = 0; s < n; ++s) extend(extend, s);
  std::sort(out.begin(), out.end());
  return out;
}

PathCoverage is_l_path_hamiltonian(const Graph& g, int l) {
  const int n = g.vertex_count();
  if (l < 1 || l > n - 2) throw std::invalid_argument("l must be between 1 and n-2");
  for (int len = 1; len <= l; ++len)
    for (const Path& p : enumerate_paths(g, len))
      if (!find_ham_cycle_containing_path(g, p)) return {false, p};
  return {true, std::nullopt};
}

}  // namespace pathham
