#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pathham {

// Subset of {0,...,63} packed into one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet of(std::initializer_list<int> verts) {
    VertexSet s;
    for (int v : verts) s.add(v);
    return s;
  }
  // {0, 1, ..., n-1}
  static constexpr VertexSet below(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr void add(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::string to_string() const;  // "{0,2,4}"

 private:
  std::uint64_t bits_ = 0;
};

// Simple undirected graph on at most 64 vertices; one neighbor word per vertex.
// No loops, no parallel edges.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Graph(int n);

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return VertexSet::below(n_); }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  VertexSet neighbors(int v) const;
  int degree(int v) const;
  int edge_count() const;

  // Symmetry, no loops, no bits at or above n, even degree sum.
  void check_invariants() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void require_vertex(int v) const;

  int n_;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// Simple path, stored endpoint-normalized: first vertex <= last vertex.
class Path {
 public:
  // Validates the sequence against g (>=2 distinct vertices, consecutive
  // adjacency) and normalizes orientation.
  static Path in_graph(const Graph& g, std::span<const int> verts);

  const std::vector<int>& verts() const { return verts_; }
  int length() const { return static_cast<int>(verts_.size()) - 1; }  // edge count
  VertexSet vertex_set() const;
  std::string to_string() const;  // "0,1,2"

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) { return a.verts_ <=> b.verts_; }

 private:
  Path() = default;
  std::vector<int> verts_;
};

// Simple cycle, stored in canonical rotation/reflection: starts at its
// minimum vertex and the second vertex is smaller than the last.
class Cycle {
 public:
  static Cycle in_graph(const Graph& g, std::span<const int> verts);

  const std::vector<int>& verts() const { return verts_; }
  int size() const { return static_cast<int>(verts_.size()); }
  bool is_hamiltonian(const Graph& g) const { return size() == g.vertex_count(); }
  // True when p's vertex sequence appears consecutively along the cycle
  // (in either direction).
  bool contains_path(const Path& p) const;
  VertexSet vertex_set() const;
  std::string to_string() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.verts_ <=> b.verts_; }

 private:
  Cycle() = default;
  std::vector<int> verts_;
};

int degree(const Graph& g, int v);
bool is_k_regular(const Graph& g, int k);
bool is_connected(const Graph& g);
// n >= 3, connected, and no single vertex disconnects the rest.
bool is_2_connected(const Graph& g);
// True when deleting s disconnects the remaining vertices. Requires s to be a
// proper subset of V(g).
bool is_cut_set(const Graph& g, VertexSet s);

// BFS restricted to `region`; true when region is empty or one component.
bool connected_within(const Graph& g, VertexSet region);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_label;  // new index -> vertex id in the source graph
};
// Induced subgraph on V(g) minus s, vertices relabeled contiguously in
// ascending original order.
InducedSubgraph remove_vertices(const Graph& g, VertexSet s);

}  // namespace pathham
