#ifndef FOLKMAN_CLIQUE_HPP
#define FOLKMAN_CLIQUE_HPP

#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

namespace detail {

// Branch-and-bound maximum clique over bit rows with a greedy coloring
// bound (BBMC style).  stop_at > 0 terminates as soon as a clique of that
// size is found, which is all the decision queries need.
struct CliqueSearch {
  const Graph& g;
  int best = 0;
  int stop_at = 0;  // 0: find the true maximum

  explicit CliqueSearch(const Graph& graph) : g(graph) {}

  bool done() const { return stop_at > 0 && best >= stop_at; }

  void expand(VertexSet pool, int rsize) {
    // Greedy coloring of the pool; bounds come out non-decreasing.
    int order[max_vertices];
    int bound[max_vertices];
    int cnt = 0;
    VertexSet rest = pool;
    int color = 0;
    while (rest) {
      ++color;
      VertexSet cand = rest;
      while (cand) {
        int v = first_vertex(cand);
        order[cnt] = v;
        bound[cnt] = color;
        ++cnt;
        rest &= ~vbit(v);
        cand &= ~(vbit(v) | g.neighbors(v));
      }
    }
    for (int i = cnt - 1; i >= 0; --i) {
      if (rsize + bound[i] <= best) return;  // earlier entries bound lower
      int v = order[i];
      VertexSet next = pool & g.neighbors(v);
      if (rsize + 1 > best) best = rsize + 1;
      if (done()) return;
      if (next) {
        expand(next, rsize + 1);
        if (done()) return;
      }
      pool &= ~vbit(v);
    }
  }
};

}  // namespace detail

inline int clique_number(const Graph& g) {
  if (g.order() == 0) return 0;
  detail::CliqueSearch s(g);
  s.expand(g.vertices(), 0);
  return s.best;
}

// True iff some t-clique lies inside the vertex set s.
inline bool has_clique_within(const Graph& g, VertexSet s, int t) {
  if (t <= 0) return true;
  if (t == 1) return s != 0;
  if (popcount(s) < t) return false;
  detail::CliqueSearch cs(g);
  cs.stop_at = t;
  cs.expand(s, 0);
  return cs.best >= t;
}

inline bool has_clique(const Graph& g, int t) {
  if (t <= 0) return true;
  if (t == 1) return g.order() >= 1;
  return has_clique_within(g, g.vertices(), t);
}

inline int independence_number(const Graph& g) { return clique_number(complement(g)); }

inline int independence_number_within(const Graph& g, VertexSet s) {
  return clique_number(remove_vertices(g, g.vertices() & ~s));
}

// (+K_t): every added edge creates a new t-clique, i.e. the endpoints of
// each non-edge share a common (t-2)-clique inside their joint
// neighborhood.  Complete graphs qualify vacuously.
inline bool is_plus_kt(const Graph& g, int t) {
  int n = g.order();
  for (int v = 0; v < n; ++v) {
    VertexSet non = ~g.neighbors(v) & g.vertices() & ~vbit(v);
    for (int u : bits(non)) {
      if (u < v) continue;
      if (!has_clique_within(g, g.neighbors(v) & g.neighbors(u), t - 2)) return false;
    }
  }
  return true;
}

inline bool is_maximal_kq_free(const Graph& g, int q) {
  return !has_clique(g, q) && is_plus_kt(g, q);
}

namespace detail {

// Enumerates all inclusion-maximal K_t-free vertex sets, Bron-Kerbosch
// style: S chosen, C candidates still to decide (ascending index), X
// excluded vertices that could still extend S.  Every maximal set is
// reported exactly once because branches partition on membership of the
// lowest undecided vertex.
template <typename Sink>
struct MaxKtFreeSearch {
  const Graph& g;
  int t;
  Sink& sink;

  bool addable(VertexSet s, int v) const {
    return !has_clique_within(g, s & g.neighbors(v), t - 1);
  }

  void run(VertexSet s, VertexSet c, VertexSet x) {
    if (!c) {
      if (!x) sink(s);
      return;
    }
    // Dead branch: some excluded vertex can never be blocked by the
    // remaining candidates, so no maximal set lies below this node.
    for (int u : bits(x))
      if (!has_clique_within(g, (s | c) & g.neighbors(u), t - 1)) return;
    int v = first_vertex(c);
    c &= ~vbit(v);
    if (addable(s, v)) {
      // include v; excluded vertices that are now blocked drop out of x
      VertexSet s2 = s | vbit(v);
      VertexSet x2 = 0;
      for (int u : bits(x))
        if (addable(s2, u)) x2 |= vbit(u);
      run(s2, c, x2);
      run(s, c, x | vbit(v));
    } else {
      run(s, c, x);
    }
  }
};

}  // namespace detail

inline std::vector<VertexSet> maximal_ktfree_subsets(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("maximal_ktfree_subsets: t >= 1 required");
  std::vector<VertexSet> out;
  auto sink = [&](VertexSet s) { out.push_back(s); };
  detail::MaxKtFreeSearch<decltype(sink)> search{g, t, sink};
  search.run(0, g.vertices(), 0);
  return out;
}

// Proposition-style degree filter for H(2,2,p;p+1) searches: Delta(G) <= n-4.
inline bool degree_bound_holds(const Graph& g) {
  return max_degree(g) <= g.order() - 4;
}

}  // namespace folkman

#endif  // FOLKMAN_CLIQUE_HPP
