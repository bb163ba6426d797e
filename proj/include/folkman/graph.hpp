#ifndef FOLKMAN_GRAPH_HPP
#define FOLKMAN_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace folkman {

// Vertex capacity is fixed at build time so that a neighborhood always fits
// in one machine word.  All search kernels below rely on that.
#ifndef FOLKMAN_MAX_VERTICES
#define FOLKMAN_MAX_VERTICES 64
#endif
inline constexpr int max_vertices = FOLKMAN_MAX_VERTICES;
static_assert(max_vertices >= 32 && max_vertices <= 64,
              "neighborhoods must fit a 64-bit word");

// Subset of vertices {0..n-1} as a bit row.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet all_vertices(int n) {
  return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

// Iterate set bits: for (int v : bits(mask)) ...
struct BitRange {
  VertexSet m;
  struct iterator {
    VertexSet m;
    int operator*() const { return std::countr_zero(m); }
    iterator& operator++() { m &= m - 1; return *this; }
    bool operator!=(const iterator& o) const { return m != o.m; }
  };
  iterator begin() const { return {m}; }
  iterator end() const { return {0}; }
};
inline BitRange bits(VertexSet m) { return {m}; }

// Undirected simple graph on at most max_vertices vertices.  Row v of adj
// is the neighborhood N(v).  Values are immutable after construction;
// every mutating operation returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices) throw std::invalid_argument("graph order out of range");
  }

  int order() const { return n_; }
  VertexSet vertices() const { return all_vertices(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  int degree(int v) const { return popcount(adj_[v]); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  bool operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
      if (adj_[v] != o.adj_[v]) return false;
    return true;
  }

  Graph with_edge(int u, int v) const {
    check_pair(u, v);
    if (has_edge(u, v)) throw std::invalid_argument("edge already present");
    Graph g = *this;
    g.adj_[u] |= vbit(v);
    g.adj_[v] |= vbit(u);
    return g;
  }

  Graph without_edge(int u, int v) const {
    check_pair(u, v);
    if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
    Graph g = *this;
    g.adj_[u] &= ~vbit(v);
    g.adj_[v] &= ~vbit(u);
    return g;
  }

  // Internal fast paths for the search kernels; they keep the symmetry and
  // zero-diagonal invariants but skip argument validation.
  void toggle_edge_unchecked(int u, int v) {
    adj_[u] ^= vbit(v);
    adj_[v] ^= vbit(u);
  }
  // Overwrites row v and mirrors the bits into the other rows.  Only safe
  // while building a graph whose rows are assigned exactly once.
  void assign_row_unchecked(int v, VertexSet nb) {
    adj_[v] = nb;
    for (int u : bits(nb)) adj_[u] |= vbit(v);
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
      throw std::invalid_argument("vertex pair out of range");
  }

  int n_ = 0;
  std::array<VertexSet, max_vertices> adj_{};
};

inline Graph complete(int k) {
  if (k < 0 || k > max_vertices) throw std::invalid_argument("complete: order exceeds capacity");
  Graph g(k);
  VertexSet all = all_vertices(k);
  for (int v = 0; v < k; ++v) g.assign_row_unchecked(v, all & ~vbit(v));
  return g;
}

// K_k minus one edge.
inline Graph complete_minus_edge(int k) {
  if (k < 2) throw std::invalid_argument("complete_minus_edge: need k >= 2");
  return complete(k).without_edge(0, 1);
}

inline Graph cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle: need k >= 3");
  if (k > max_vertices) throw std::invalid_argument("cycle: order exceeds capacity");
  Graph g(k);
  for (int v = 0; v < k; ++v) g.toggle_edge_unchecked(v, (v + 1) % k);
  return g;
}

// Join G1 + G2: disjoint union plus all edges between the two parts.
inline Graph join(const Graph& g1, const Graph& g2) {
  int n1 = g1.order(), n2 = g2.order();
  if (n1 + n2 > max_vertices) throw std::invalid_argument("join: order exceeds capacity");
  Graph h(n1 + n2);
  VertexSet part1 = all_vertices(n1);
  VertexSet part2 = all_vertices(n1 + n2) & ~part1;
  for (int v = 0; v < n1; ++v)
    for (int u : bits(g1.neighbors(v)))
      if (u > v) h.toggle_edge_unchecked(v, u);
  for (int v = 0; v < n2; ++v)
    for (int u : bits(g2.neighbors(v)))
      if (u > v) h.toggle_edge_unchecked(n1 + v, n1 + u);
  for (int v : bits(part1))
    for (int u : bits(part2)) h.toggle_edge_unchecked(v, u);
  return h;
}

inline Graph complement(const Graph& g) {
  int n = g.order();
  Graph h(n);
  for (int v = 0; v < n; ++v)
    h.assign_row_unchecked(v, ~g.neighbors(v) & all_vertices(n) & ~vbit(v));
  return h;
}

// Induced subgraph on V minus the given set; remaining vertices are
// relabeled compactly preserving relative order.
inline Graph remove_vertices(const Graph& g, VertexSet drop) {
  int n = g.order();
  if (drop & ~all_vertices(n)) throw std::invalid_argument("remove_vertices: set out of range");
  VertexSet keep = all_vertices(n) & ~drop;
  std::array<int, max_vertices> newlabel{};
  int m = 0;
  for (int v : bits(keep)) newlabel[v] = m++;
  Graph h(m);
  for (int v : bits(keep))
    for (int u : bits(g.neighbors(v) & keep))
      if (u > v) h.toggle_edge_unchecked(newlabel[v], newlabel[u]);
  return h;
}

inline Graph add_vertex_with_neighborhood(const Graph& g, VertexSet nb) {
  int n = g.order();
  if (n + 1 > max_vertices) throw std::invalid_argument("add_vertex: order exceeds capacity");
  if (nb & ~all_vertices(n)) throw std::invalid_argument("add_vertex: neighborhood out of range");
  Graph h(n + 1);
  for (int v = 0; v < n; ++v)
    for (int u : bits(g.neighbors(v)))
      if (u > v) h.toggle_edge_unchecked(v, u);
  for (int u : bits(nb)) h.toggle_edge_unchecked(n, u);
  return h;
}

// Relabel: vertex perm[i] of g becomes vertex i of the result.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int n = g.order();
  Graph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(perm[i], perm[j])) h.toggle_edge_unchecked(i, j);
  return h;
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int d = max_vertices;
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

}  // namespace folkman

#endif  // FOLKMAN_GRAPH_HPP
