#pragma once

// Strict degeneracy testing by peeling.
//
// G is strictly h-degenerate when every non-empty subhypergraph H has a
// vertex v with d_H(v) <= h(v) - 1. Peeling repeatedly removes such a vertex
// (smallest id first, for reproducible orders); it either eliminates
// everything, yielding an elimination order, or gets stuck on the core: the
// unique maximal vertex set in which every vertex w keeps degree >= h(w).
// The core does not depend on the removal order, since a vertex removable at
// some point stays removable (degrees only drop), so the set of never-
// removable vertices is the same for every order.

#include <set>

#include "degpart/hypergraph.hpp"

namespace degpart {

// h(v) lives at index v-1; must cover all vertices of the ambient hypergraph.
using DegreeBudget = std::vector<int>;

struct PeelResult {
  // Vertices in removal order. Covers all of S exactly when core is empty.
  std::vector<VertexId> order;
  // The stuck remainder: empty iff G[S] is strictly h-degenerate.
  VertexSet core;

  bool degenerate() const { return core.empty(); }
};

inline void require_budget(const Hypergraph& g, const DegreeBudget& h) {
  if (static_cast<int>(h.size()) != g.vertex_count())
    throw std::invalid_argument("degree budget must have one entry per vertex");
  for (int x : h)
    if (x < 0) throw std::invalid_argument("degree budget entries must be >= 0");
}

inline PeelResult peel_within(const Hypergraph& g, const VertexSet& s, const DegreeBudget& h) {
  require_budget(g, h);
  auto alive = detail::make_mask(g, s);
  std::vector<char> edge_alive(g.edge_count(), 0);
  std::vector<int> deg(g.vertex_count() + 1, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (detail::edge_inside(g.edge(e), alive)) {
      edge_alive[e] = 1;
      for (VertexId v : g.edge(e)) ++deg[v];
    }
  }

  std::set<VertexId> removable;
  for (VertexId v : s)
    if (deg[v] <= h[v - 1] - 1) removable.insert(v);

  PeelResult result;
  while (!removable.empty()) {
    VertexId v = *removable.begin();
    removable.erase(removable.begin());
    alive[v] = 0;
    result.order.push_back(v);
    for (EdgeId e : g.incident_edges(v)) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = 0;
      for (VertexId w : g.edge(e)) {
        if (w == v || !alive[w]) continue;
        if (--deg[w] <= h[w - 1] - 1) removable.insert(w);
      }
    }
  }
  for (VertexId v : s)
    if (alive[v]) result.core.push_back(v);
  return result;
}

inline PeelResult peel(const Hypergraph& g, const DegreeBudget& h) {
  return peel_within(g, g.vertices(), h);
}

inline bool is_strictly_degenerate_within(const Hypergraph& g, const VertexSet& s,
                                          const DegreeBudget& h) {
  return peel_within(g, s, h).degenerate();
}

inline bool is_strictly_degenerate(const Hypergraph& g, const DegreeBudget& h) {
  return peel(g, h).degenerate();
}

// col(G) = 1 + the maximum over subhypergraphs of the minimum degree, and 0
// for the empty hypergraph. Computed by repeatedly deleting a minimum-degree
// vertex (smallest id on ties) and taking 1 + the largest minimum seen, the
// classic equivalence.
inline int coloring_number(const Hypergraph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<char> alive(n + 1, 1);
  std::vector<char> edge_alive(g.edge_count(), 1);
  std::vector<int> deg(n + 1, 0);
  for (VertexId v = 1; v <= n; ++v) deg[v] = g.degree(v);

  // (degree, id) ordering gives the smallest-id minimum-degree vertex first.
  std::set<std::pair<int, VertexId>> queue;
  for (VertexId v = 1; v <= n; ++v) queue.insert({deg[v], v});

  int max_min = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    max_min = std::max(max_min, d);
    alive[v] = 0;
    for (EdgeId e : g.incident_edges(v)) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = 0;
      for (VertexId w : g.edge(e)) {
        if (w == v || !alive[w]) continue;
        queue.erase({deg[w], w});
        --deg[w];
        queue.insert({deg[w], w});
      }
    }
  }
  return 1 + max_min;
}

// Stuck core of peeling H with budget f1. Intended for H = G1* + v where G1*
// is a maximal strictly f1-degenerate subhypergraph: the core is then
// non-empty and contains v. An empty core signals a violated precondition
// (G1* was not maximal) and throws.
inline VertexSet witness_core(const Hypergraph& h_graph, const DegreeBudget& f1) {
  PeelResult r = peel(h_graph, f1);
  if (r.core.empty())
    throw std::invalid_argument(
        "witness_core: input is strictly degenerate (maximality precondition violated)");
  return r.core;
}

inline bool is_h_regular_within(const Hypergraph& g, const VertexSet& s, const DegreeBudget& h) {
  require_budget(g, h);
  for (VertexId v : s)
    if (degree_within(g, s, v) != h[v - 1]) return false;
  return true;
}

inline bool is_h_regular(const Hypergraph& g, const DegreeBudget& h) {
  require_budget(g, h);
  for (VertexId v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) != h[v - 1]) return false;
  return true;
}

}  // namespace degpart
