#include "pathham/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathham {

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  s += '}';
  return s;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be between 1 and 64");
}

void Graph::require_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
  require_vertex(u);
  require_vertex(v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  require_vertex(u);
  require_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

VertexSet Graph::neighbors(int v) const {
  require_vertex(v);
  return VertexSet(adj_[v]);
}

int Graph::degree(int v) const {
  require_vertex(v);
  return std::popcount(adj_[v]);
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

void Graph::check_invariants() const {
  const std::uint64_t allowed = vertices().bits();
  int degree_sum = 0;
  for (int v = 0; v < n_; ++v) {
    if (adj_[v] & ~allowed) throw std::logic_error("adjacency bit beyond vertex range");
    if ((adj_[v] >> v) & 1) throw std::logic_error("loop present");
    degree_sum += std::popcount(adj_[v]);
  }
  for (int v = n_; v < kMaxVertices; ++v)
    if (adj_[v]) throw std::logic_error("adjacency row for nonexistent vertex");
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (((adj_[u] >> v) & 1) != ((adj_[v] >> u) & 1))
        throw std::logic_error("asymmetric adjacency");
  if (degree_sum % 2 != 0) throw std::logic_error("odd degree sum");  // handshake
}

namespace {

void require_vertex_walk(const Graph& g, std::span<const int> verts, std::size_t min_len,
                         const char* what) {
  if (verts.size() < min_len) throw std::invalid_argument(std::string(what) + ": too few vertices");
  VertexSet seen;
  for (int v : verts) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument(std::string(what) + ": vertex out of range");
    if (seen.contains(v)) throw std::invalid_argument(std::string(what) + ": repeated vertex");
    seen.add(v);
  }
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    if (!g.has_edge(verts[i], verts[i + 1]))
      throw std::invalid_argument(std::string(what) + ": consecutive vertices not adjacent");
}

std::string join_csv(const std::vector<int>& verts) {
  std::string s;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(verts[i]);
  }
  return s;
}

}  // namespace

Path Path::in_graph(const Graph& g, std::span<const int> verts) {
  require_vertex_walk(g, verts, 2, "path");
  Path p;
  p.verts_.assign(verts.begin(), verts.end());
  if (p.verts_.front() > p.verts_.back()) std::reverse(p.verts_.begin(), p.verts_.end());
  return p;
}

VertexSet Path::vertex_set() const {
  VertexSet s;
  for (int v : verts_) s.add(v);
  return s;
}

std::string Path::to_string() const { return join_csv(verts_); }

Cycle Cycle::in_graph(const Graph& g, std::span<const int> verts) {
  require_vertex_walk(g, verts, 3, "cycle");
  if (!g.has_edge(verts.back(), verts.front()))
    throw std::invalid_argument("cycle: endpoints not adjacent");
  Cycle c;
  c.verts_.assign(verts.begin(), verts.end());
  // rotate the minimum vertex to the front, then pick the direction that
  // makes the second vertex smaller than the last
  auto min_it = std::min_element(c.verts_.begin(), c.verts_.end());
  std::rotate(c.verts_.begin(), min_it, c.verts_.end());
  if (c.verts_[1] > c.verts_.back()) std::reverse(c.verts_.begin() + 1, c.verts_.end());
  return c;
}

VertexSet Cycle::vertex_set() const {
  VertexSet s;
  for (int v : verts_) s.add(v);
  return s;
}

std::string Cycle::to_string() const { return join_csv(verts_); }

bool Cycle::contains_path(const Path& p) const {
  const auto& pv = p.verts();
  const int m = size();
  if (static_cast<int>(pv.size()) > m) return false;
  int idx = -1;
  for (int i = 0; i < m; ++i)
    if (verts_[i] == pv[0]) {
      idx = i;
      break;
    }
  if (idx < 0) return false;
  bool fwd = true, bwd = true;
  for (std::size_t t = 1; t < pv.size(); ++t) {
    const int ti = static_cast<int>(t) % m;
    if (verts_[(idx + ti) % m] != pv[t]) fwd = false;
    if (verts_[(idx + m - ti) % m] != pv[t]) bwd = false;
  }
  return fwd || bwd;
}

int degree(const Graph& g, int v) { return g.degree(v); }

bool is_k_regular(const Graph& g, int k) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

bool connected_within(const Graph& g, VertexSet region) {
  if (region.empty()) return true;
  const std::uint64_t bits = region.bits();
  std::uint64_t comp = std::uint64_t{1} << region.lowest();
  for (;;) {
    std::uint64_t grow = comp;
    for (std::uint64_t rest = comp; rest != 0; rest &= rest - 1)
      grow |= g.neighbors(std::countr_zero(rest)).bits();
    grow = comp | (grow & bits);
    if (grow == comp) break;
    comp = grow;
  }
  return comp == bits;
}

bool is_connected(const Graph& g) { return connected_within(g, g.vertices()); }

bool is_2_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) return false;
  if (!is_connected(g)) return false;
  for (int v = 0; v < n; ++v) {
    VertexSet rest = g.vertices();
    rest.remove(v);
    if (!connected_within(g, rest)) return false;
  }
  return true;
}

bool is_cut_set(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::invalid_argument("cut-set probe has stray vertices");
  if (s == g.vertices()) throw std::invalid_argument("cut-set probe must be a proper subset");
  return !connected_within(g, g.vertices() - s);
}

InducedSubgraph remove_vertices(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::invalid_argument("removal set has stray vertices");
  const VertexSet keep = g.vertices() - s;
  if (keep.empty()) throw std::invalid_argument("cannot remove every vertex");
  std::vector<int> label;
  label.reserve(keep.count());
  for (int v : keep) label.push_back(v);
  Graph h(static_cast<int>(label.size()));
  for (std::size_t i = 0; i < label.size(); ++i)
    for (std::size_t j = i + 1; j < label.size(); ++j)
      if (g.has_edge(label[i], label[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return InducedSubgraph{std::move(h), std::move(label)};
}

}  // namespace pathham
