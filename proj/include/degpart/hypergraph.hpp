#pragma once

// Core hypergraph value type and the structural queries built on it:
// degrees, components, hyperpath distances, separating vertices, blocks,
// and the named generators (t-fold complete graphs / cycles, vertex merges).
//
// A hypergraph has vertices 1..n and a multiset of hyperedges, each a set of
// at least two distinct vertices. Parallel edges are allowed and their
// multiplicity is significant; loops are not allowed. All values are
// immutable after construction, so they are safe to share across threads.

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace degpart {

using VertexId = int;
using EdgeId = int;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<VertexId>;
// Sorted ascending, size >= 2, distinct vertices.
using Hyperedge = std::vector<VertexId>;

inline bool is_sorted_unique(const std::vector<VertexId>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i - 1] >= xs[i]) return false;
  return true;
}

inline bool set_contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_insert(VertexSet s, VertexId v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
  return s;
}

inline VertexSet set_erase(VertexSet s, VertexId v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) s.erase(it);
  return s;
}

class Hypergraph {
 public:
  Hypergraph() = default;

  // Edges may arrive unsorted; they are normalized to canonical form:
  // each edge sorted ascending, edge list sorted lexicographically.
  // Throws std::invalid_argument on loops (repeated vertex), edges of
  // size < 2, or vertex ids outside 1..n.
  Hypergraph(int vertex_count, std::vector<Hyperedge> edges)
      : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges_) {
      std::sort(e.begin(), e.end());
      if (e.size() < 2)
        throw std::invalid_argument("hyperedge with fewer than 2 vertices");
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw std::invalid_argument("loop: repeated vertex in hyperedge");
      if (e.front() < 1 || e.back() > n_)
        throw std::invalid_argument("vertex id out of range 1..n");
    }
    std::sort(edges_.begin(), edges_.end());
    incident_.assign(n_ + 1, {});
    for (EdgeId i = 0; i < static_cast<EdgeId>(edges_.size()); ++i)
      for (VertexId v : edges_[i]) incident_[v].push_back(i);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(EdgeId e) const { return edges_[e]; }

  void require_vertex(VertexId v) const {
    if (v < 1 || v > n_) {
      std::ostringstream os;
      os << "unknown vertex id " << v << " (n=" << n_ << ")";
      throw std::invalid_argument(os.str());
    }
  }

  const std::vector<EdgeId>& incident_edges(VertexId v) const {
    require_vertex(v);
    return incident_[v];
  }

  // Number of hyperedges containing v, counted with multiplicity.
  int degree(VertexId v) const {
    require_vertex(v);
    return static_cast<int>(incident_[v].size());
  }

  int max_degree() const {
    int d = 0;
    for (VertexId v = 1; v <= n_; ++v)
      d = std::max(d, static_cast<int>(incident_[v].size()));
    return d;
  }

  VertexSet vertices() const {
    VertexSet all(n_);
    std::iota(all.begin(), all.end(), 1);
    return all;
  }

  bool empty() const { return n_ == 0; }

  // Canonical form makes structural equality meaningful.
  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

namespace detail {

inline std::vector<char> make_mask(const Hypergraph& g, const VertexSet& s) {
  std::vector<char> mask(g.vertex_count() + 1, 0);
  for (VertexId v : s) {
    g.require_vertex(v);
    mask[v] = 1;
  }
  return mask;
}

inline bool edge_inside(const Hyperedge& e, const std::vector<char>& mask) {
  for (VertexId v : e)
    if (!mask[v]) return false;
  return true;
}

}  // namespace detail

// Degree of v in the subhypergraph induced by S (only edges fully inside S count).
inline int degree_within(const Hypergraph& g, const VertexSet& s, VertexId v) {
  auto mask = detail::make_mask(g, s);
  if (!mask[v]) throw std::invalid_argument("degree_within: v not in S");
  int d = 0;
  for (EdgeId e : g.incident_edges(v))
    if (detail::edge_inside(g.edge(e), mask)) ++d;
  return d;
}

// Connected components of the subhypergraph induced by S, as vertex sets
// ordered by smallest member. Two vertices are adjacent when they share a
// hyperedge that lies entirely inside S.
inline std::vector<VertexSet> components_within(const Hypergraph& g, const VertexSet& s) {
  auto mask = detail::make_mask(g, s);
  std::vector<char> seen(g.vertex_count() + 1, 0);
  std::vector<VertexSet> out;
  for (VertexId start : s) {
    if (seen[start]) continue;
    VertexSet comp;
    std::deque<VertexId> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (EdgeId e : g.incident_edges(v)) {
        if (!detail::edge_inside(g.edge(e), mask)) continue;
        for (VertexId w : g.edge(e)) {
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<VertexSet> components(const Hypergraph& g) {
  return components_within(g, g.vertices());
}

inline bool is_connected_within(const Hypergraph& g, const VertexSet& s) {
  if (s.empty()) return false;
  return components_within(g, s).size() == 1;
}

inline bool is_connected(const Hypergraph& g) {
  return is_connected_within(g, g.vertices());
}

// Length of a shortest (v,w)-hyperpath inside G[S], or nullopt when none
// exists. A hyperpath alternates distinct vertices and distinct edges; a
// shortest vertex walk in the "shares a hyperedge" adjacency automatically
// has distinct vertices AND distinct edges (a repeated edge would contain
// two non-consecutive walk vertices and thus admit a shortcut), so plain
// breadth-first search computes hyperpath distance exactly.
inline std::optional<int> distance_within(const Hypergraph& g, const VertexSet& s,
                                          VertexId v, VertexId w) {
  if (v == w)
    throw std::invalid_argument("distance: hyperpaths are defined for distinct vertices");
  auto mask = detail::make_mask(g, s);
  if (!mask[v] || !mask[w]) throw std::invalid_argument("distance: vertex not in S");
  std::vector<int> dist(g.vertex_count() + 1, -1);
  dist[v] = 0;
  std::deque<VertexId> queue{v};
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    if (u == w) return dist[u];
    for (EdgeId e : g.incident_edges(u)) {
      if (!detail::edge_inside(g.edge(e), mask)) continue;
      for (VertexId x : g.edge(e)) {
        if (dist[x] < 0) {
          dist[x] = dist[u] + 1;
          queue.push_back(x);
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<int> distance(const Hypergraph& g, VertexId v, VertexId w) {
  return distance_within(g, g.vertices(), v, w);
}

// Induced subhypergraph relabeled to 1..|X|, plus the id mapping back.
struct Induced {
  Hypergraph graph;
  std::vector<VertexId> to_ambient;  // new id i (1-based) -> to_ambient[i-1]
};

inline Induced induced(const Hypergraph& g, const VertexSet& x) {
  if (!is_sorted_unique(x)) throw std::invalid_argument("induced: X must be a sorted vertex set");
  auto mask = detail::make_mask(g, x);
  std::vector<VertexId> to_new(g.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) to_new[x[i]] = static_cast<VertexId>(i) + 1;
  std::vector<Hyperedge> kept;
  for (const Hyperedge& e : g.edges()) {
    if (!detail::edge_inside(e, mask)) continue;
    Hyperedge mapped;
    mapped.reserve(e.size());
    for (VertexId v : e) mapped.push_back(to_new[v]);
    kept.push_back(std::move(mapped));
  }
  return Induced{Hypergraph(static_cast<int>(x.size()), std::move(kept)), x};
}

// All v whose removal disconnects G: G - v (which drops every edge containing
// v) has at least two components. Note the hypergraph subtlety: every vertex
// of a hyperedge of size >= 3 whose removal strands the other endpoints is
// separating under this definition, even when no two edges can be pulled
// apart at it. Requires G connected.
inline VertexSet separating_vertices(const Hypergraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("separating_vertices: input must be connected");
  VertexSet out;
  VertexSet all = g.vertices();
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    VertexSet rest = set_erase(all, v);
    if (components_within(g, rest).size() >= 2) out.push_back(v);
  }
  return out;
}

// Groups of G[S] - v glued by the edges through v: start from the components
// of G[S] - v and union any two that some edge through v touches together.
// Each group + v induces a connected piece, and v can be written as a vertex
// merge of two smaller hypergraphs exactly when there are >= 2 groups.
inline std::vector<VertexSet> split_groups(const Hypergraph& g, const VertexSet& s, VertexId v) {
  VertexSet rest = set_erase(s, v);
  std::vector<VertexSet> comps = components_within(g, rest);
  if (comps.empty()) return {};
  std::vector<int> comp_of(g.vertex_count() + 1, -1);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (VertexId w : comps[i]) comp_of[w] = static_cast<int>(i);

  std::vector<int> parent(comps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  auto s_mask = detail::make_mask(g, s);
  for (EdgeId ei : g.incident_edges(v)) {
    const Hyperedge& e = g.edge(ei);
    if (!detail::edge_inside(e, s_mask)) continue;
    int first = -1;
    for (VertexId w : e) {
      if (w == v) continue;
      int c = find(comp_of[w]);
      if (first < 0)
        first = c;
      else if (c != first)
        parent[c] = first;
    }
  }

  std::vector<VertexSet> groups(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    int root = find(static_cast<int>(i));
    VertexSet& dst = groups[root];
    VertexSet merged = set_union(dst, comps[i]);
    dst = std::move(merged);
  }
  std::vector<VertexSet> out;
  for (auto& grp : groups)
    if (!grp.empty()) out.push_back(std::move(grp));
  std::sort(out.begin(), out.end());
  return out;
}

// A vertex admitting a split into >= 2 groups, or 0 when none exists (G[S] is
// a block, i.e. not expressible as a merge of two smaller hypergraphs).
inline VertexId find_split_vertex(const Hypergraph& g, const VertexSet& s) {
  for (VertexId v : s)
    if (split_groups(g, s, v).size() >= 2) return v;
  return 0;
}

inline bool is_block_within(const Hypergraph& g, const VertexSet& s) {
  return find_split_vertex(g, s) == 0;
}

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // each induces a connected block of G
  // Vertices lying in two or more blocks. Each of these disconnects G when
  // removed, so they form a subset of separating_vertices(G).
  VertexSet separating_vertices;
};

namespace detail {

inline void blocks_rec(const Hypergraph& g, const VertexSet& s, std::vector<VertexSet>& out) {
  for (VertexId v : s) {
    std::vector<VertexSet> groups = split_groups(g, s, v);
    if (groups.size() >= 2) {
      for (const VertexSet& grp : groups) blocks_rec(g, set_insert(grp, v), out);
      return;
    }
  }
  out.push_back(s);
}

}  // namespace detail

// Maximal connected pieces that cannot be split at any vertex. Every edge of
// a connected G lies in exactly one block; two blocks meet in at most one
// vertex. Recursive splitting at merge vertices, grouping per split_groups.
inline BlockDecomposition blocks(const Hypergraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("blocks: input must be connected");
  BlockDecomposition dec;
  detail::blocks_rec(g, g.vertices(), dec.blocks);
  std::sort(dec.blocks.begin(), dec.blocks.end());
  std::vector<int> count(g.vertex_count() + 1, 0);
  for (const VertexSet& b : dec.blocks)
    for (VertexId v : b) ++count[v];
  for (VertexId v = 1; v <= g.vertex_count(); ++v)
    if (count[v] >= 2) dec.separating_vertices.push_back(v);
  return dec;
}

// t parallel copies of each edge of the complete graph K_n.
inline Hypergraph gen_tkn(int t, int n) {
  if (t < 1 || n < 1) throw std::invalid_argument("gen_tkn: need t >= 1, n >= 1");
  std::vector<Hyperedge> edges;
  for (VertexId i = 1; i <= n; ++i)
    for (VertexId j = i + 1; j <= n; ++j)
      for (int k = 0; k < t; ++k) edges.push_back({i, j});
  return Hypergraph(n, std::move(edges));
}

// t parallel copies of each edge of the cycle C_n (n >= 3).
inline Hypergraph gen_tcn(int t, int n) {
  if (t < 1 || n < 3) throw std::invalid_argument("gen_tcn: need t >= 1, n >= 3");
  std::vector<Hyperedge> edges;
  for (VertexId i = 1; i <= n; ++i) {
    VertexId j = (i == n) ? 1 : i + 1;
    for (int k = 0; k < t; ++k) edges.push_back({std::min(i, j), std::max(i, j)});
  }
  return Hypergraph(n, std::move(edges));
}

struct MergeResult {
  Hypergraph graph;
  std::vector<VertexId> map1;  // old id v in G1 -> map1[v-1] in the merged graph
  std::vector<VertexId> map2;
};

// Identify v1 of G1 with v2 of G2 into a single vertex with id 1; the other
// vertices of G1 follow (in ascending old order), then those of G2.
inline MergeResult merge_at(const Hypergraph& g1, VertexId v1, const Hypergraph& g2, VertexId v2) {
  g1.require_vertex(v1);
  g2.require_vertex(v2);
  std::vector<VertexId> map1(g1.vertex_count()), map2(g2.vertex_count());
  VertexId next = 2;
  for (VertexId v = 1; v <= g1.vertex_count(); ++v) map1[v - 1] = (v == v1) ? 1 : next++;
  for (VertexId v = 1; v <= g2.vertex_count(); ++v) map2[v - 1] = (v == v2) ? 1 : next++;
  std::vector<Hyperedge> edges;
  for (const Hyperedge& e : g1.edges()) {
    Hyperedge mapped;
    for (VertexId v : e) mapped.push_back(map1[v - 1]);
    edges.push_back(std::move(mapped));
  }
  for (const Hyperedge& e : g2.edges()) {
    Hyperedge mapped;
    for (VertexId v : e) mapped.push_back(map2[v - 1]);
    edges.push_back(std::move(mapped));
  }
  return MergeResult{Hypergraph(next - 1, std::move(edges)), std::move(map1), std::move(map2)};
}

}  // namespace degpart
