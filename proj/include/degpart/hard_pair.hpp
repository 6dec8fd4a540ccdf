#pragma once

// Hard pairs: the exact obstructions to f-partitionability among connected
// (G, f) with f_1(v)+...+f_p(v) >= d_G(v) everywhere. A pair is hard when it
// is one of three kinds of budgeted blocks, or is built from two smaller hard
// pairs by identifying one vertex of each (a merge), with the merged vertex
// receiving the coordinatewise sum of the two budgets:
//
//   (1) a block whose budget is concentrated in one coordinate j with
//       f_j(v) = d_G(v) at every vertex,
//   (2) a t-fold complete graph tK_n (n >= 3) with constant budget
//       (t*n_1, ..., t*n_p), n_1+...+n_p = n-1, at least two n_i nonzero,
//   (3) a t-fold odd cycle tC_n (n >= 5) with budget t in exactly two
//       coordinates k != l, zero elsewhere,
//   (4) a merge of two hard pairs as above.
//
// A 3-cycle is a complete graph, so t-fold triangles fall under kind (2);
// the odd-cycle kind deliberately starts at n = 5.
//
// recognize() decides hardness and emits a certificate tree whose embeddings
// use ambient vertex ids; check_certificate() re-verifies a tree against
// (G, f) literally, in time linear in the tree and edge set, with no
// isomorphism search.

#include <functional>
#include <map>
#include <memory>
#include <ostream>

#include "degpart/degeneracy.hpp"
#include "degpart/hypergraph.hpp"
#include "degpart/vector_function.hpp"

namespace degpart {

struct Certificate;
using CertificatePtr = std::unique_ptr<Certificate>;

struct Certificate {
  enum class Kind { block1, complete, odd_cycle, merge };

  Kind kind = Kind::block1;
  VertexSet vertices;  // ambient ids of this subtree's embedding

  int j = 0;  // block1: the concentrated coordinate

  int t = 0;  // complete / odd_cycle: edge multiplicity
  int n = 0;  // complete / odd_cycle: order

  std::vector<int> split;  // complete: n_1..n_p

  int k = 0, ell = 0;  // odd_cycle: the two budgeted coordinates

  VertexId merge_vertex = 0;                   // merge: the identified vertex
  std::vector<int> left_budget, right_budget;  // merge: its budget split
  CertificatePtr left, right;

  CertificatePtr clone() const {
    auto c = std::make_unique<Certificate>();
    c->kind = kind;
    c->vertices = vertices;
    c->j = j;
    c->t = t;
    c->n = n;
    c->split = split;
    c->k = k;
    c->ell = ell;
    c->merge_vertex = merge_vertex;
    c->left_budget = left_budget;
    c->right_budget = right_budget;
    if (left) c->left = left->clone();
    if (right) c->right = right->clone();
    return c;
  }
};

// Sum of the budget coordinates equals the degree at every vertex. Every hard
// pair is tight (each of the four kinds forces it, and merges preserve it),
// so non-tight pairs are rejected without search.
inline bool is_tight_within(const Hypergraph& g, const VertexSet& s, const VectorFunction& f) {
  require_matching(g, f);
  for (VertexId v : s)
    if (f.row_sum(v) != degree_within(g, s, v)) return false;
  return true;
}

inline bool is_tight(const Hypergraph& g, const VectorFunction& f) {
  require_matching(g, f);
  for (VertexId v = 1; v <= g.vertex_count(); ++v)
    if (f.row_sum(v) != g.degree(v)) return false;
  return true;
}

namespace detail {

// Effective budgets: the ambient f with per-vertex overrides introduced at
// merge vertices (a vertex can be overridden again deeper in the tree).
struct BudgetView {
  const VectorFunction* f;
  std::map<VertexId, std::vector<int>> overrides;

  const std::vector<int>& at(VertexId v) const {
    auto it = overrides.find(v);
    return it != overrides.end() ? it->second : f->at(v);
  }
  int sum(VertexId v) const {
    const auto& row = at(v);
    int s = 0;
    for (int x : row) s += x;
    return s;
  }
};

struct EdgeProfile {
  bool all_pairs = true;                         // every edge has size 2
  std::map<std::pair<VertexId, VertexId>, int> pair_mult;  // distinct pairs
  std::vector<EdgeId> edge_ids;                  // edges inside the set
};

inline EdgeProfile edge_profile(const Hypergraph& g, const VertexSet& s) {
  EdgeProfile prof;
  auto mask = make_mask(g, s);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Hyperedge& edge = g.edge(e);
    if (!edge_inside(edge, mask)) continue;
    prof.edge_ids.push_back(e);
    if (edge.size() != 2)
      prof.all_pairs = false;
    else
      ++prof.pair_mult[{edge[0], edge[1]}];
  }
  return prof;
}

// Uniform multiplicity of a t-fold complete graph on s, or 0.
inline int complete_multiplicity(const Hypergraph& g, const VertexSet& s) {
  EdgeProfile prof = edge_profile(g, s);
  if (!prof.all_pairs || s.size() < 3) return 0;
  std::size_t pairs = s.size() * (s.size() - 1) / 2;
  if (prof.pair_mult.size() != pairs) return 0;
  int t = prof.pair_mult.begin()->second;
  for (const auto& [pair, mult] : prof.pair_mult)
    if (mult != t) return 0;
  return t;
}

// Uniform multiplicity of a t-fold cycle on s (in the cyclic order implied by
// the adjacencies), or 0. Assumes G[s] connected.
inline int cycle_multiplicity(const Hypergraph& g, const VertexSet& s) {
  EdgeProfile prof = edge_profile(g, s);
  if (!prof.all_pairs || s.size() < 3) return 0;
  if (prof.pair_mult.size() != s.size()) return 0;
  std::map<VertexId, int> simple_deg;
  int t = prof.pair_mult.begin()->second;
  for (const auto& [pair, mult] : prof.pair_mult) {
    if (mult != t) return 0;
    ++simple_deg[pair.first];
    ++simple_deg[pair.second];
  }
  if (simple_deg.size() != s.size()) return 0;
  for (const auto& [v, d] : simple_deg)
    if (d != 2) return 0;
  if (!is_connected_within(g, s)) return 0;
  return t;
}

inline CertificatePtr classify_block_impl(const Hypergraph& g, const VertexSet& s,
                                          const BudgetView& budgets, int p) {
  // Kind (1): concentrated budget matching the block's own degrees.
  for (int j = 1; j <= p; ++j) {
    bool ok = true;
    for (VertexId v : s) {
      const auto& row = budgets.at(v);
      int d = degree_within(g, s, v);
      for (int i = 1; i <= p && ok; ++i) {
        int want = (i == j) ? d : 0;
        if (row[i - 1] != want) ok = false;
      }
      if (!ok) break;
    }
    if (ok) {
      auto cert = std::make_unique<Certificate>();
      cert->kind = Certificate::Kind::block1;
      cert->vertices = s;
      cert->j = j;
      return cert;
    }
  }

  // Kind (2): t-fold complete graph with constant budget (t n_1, ..., t n_p).
  if (int t = complete_multiplicity(g, s); t > 0) {
    const auto& row0 = budgets.at(s.front());
    bool constant = true;
    for (VertexId v : s)
      if (budgets.at(v) != row0) constant = false;
    if (constant) {
      std::vector<int> split(p);
      bool divisible = true;
      int sum = 0, nonzero = 0;
      for (int i = 0; i < p; ++i) {
        if (row0[i] % t != 0) divisible = false;
        split[i] = row0[i] / t;
        sum += split[i];
        if (split[i] > 0) ++nonzero;
      }
      int order = static_cast<int>(s.size());
      if (divisible && sum == order - 1 && nonzero >= 2) {
        auto cert = std::make_unique<Certificate>();
        cert->kind = Certificate::Kind::complete;
        cert->vertices = s;
        cert->t = t;
        cert->n = order;
        cert->split = std::move(split);
        return cert;
      }
    }
  }

  // Kind (3): t-fold odd cycle, n >= 5, budget t in two coordinates.
  if (s.size() >= 5 && s.size() % 2 == 1) {
    if (int t = cycle_multiplicity(g, s); t > 0) {
      int k = 0, ell = 0;
      bool ok = true;
      const auto& row0 = budgets.at(s.front());
      for (int i = 1; i <= p && ok; ++i) {
        if (row0[i - 1] == t) {
          if (k == 0)
            k = i;
          else if (ell == 0)
            ell = i;
          else
            ok = false;
        } else if (row0[i - 1] != 0) {
          ok = false;
        }
      }
      if (ok && k != 0 && ell != 0) {
        for (VertexId v : s)
          if (budgets.at(v) != row0) ok = false;
        if (ok) {
          auto cert = std::make_unique<Certificate>();
          cert->kind = Certificate::Kind::odd_cycle;
          cert->vertices = s;
          cert->t = t;
          cert->n = static_cast<int>(s.size());
          cert->k = k;
          cert->ell = ell;
          return cert;
        }
      }
    }
  }
  return nullptr;
}

struct RecognizeMemo {
  std::map<std::string, CertificatePtr> table;

  static std::string key(const VertexSet& s, const BudgetView& budgets) {
    std::ostringstream os;
    for (VertexId v : s) os << v << ',';
    os << '|';
    for (const auto& [v, row] : budgets.overrides) {
      if (!set_contains(s, v)) continue;
      os << v << ':';
      for (int x : row) os << x << ',';
      os << ';';
    }
    return os.str();
  }
};

// Enumerate allocations a with 0 <= a <= cap coordinatewise and sum(a) =
// total, in lexicographic order, invoking fn on each; fn returns true to stop.
inline bool for_each_allocation(const std::vector<int>& cap, int total,
                                const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> a(cap.size(), 0);
  std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int remaining) -> bool {
    if (i + 1 == cap.size()) {
      if (remaining > cap[i]) return false;
      a[i] = remaining;
      return fn(a);
    }
    for (int x = 0; x <= std::min(cap[i], remaining); ++x) {
      a[i] = x;
      if (rec(i + 1, remaining - x)) return true;
    }
    return false;
  };
  if (cap.empty()) return false;
  if (total < 0) return false;
  return rec(0, total);
}

inline CertificatePtr recognize_rec(const Hypergraph& g, const VectorFunction& f,
                                    const VertexSet& s, BudgetView budgets,
                                    RecognizeMemo& memo) {
  // Drop overrides for vertices outside s so memo keys stay canonical.
  for (auto it = budgets.overrides.begin(); it != budgets.overrides.end();) {
    if (!set_contains(s, it->first))
      it = budgets.overrides.erase(it);
    else
      ++it;
  }
  std::string key = RecognizeMemo::key(s, budgets);
  if (auto it = memo.table.find(key); it != memo.table.end())
    return it->second ? it->second->clone() : nullptr;

  auto remember = [&](CertificatePtr cert) -> CertificatePtr {
    memo.table[key] = cert ? cert->clone() : nullptr;
    return cert;
  };

  // Hard pairs are tight; sides of tight merges stay tight, but recheck
  // cheaply rather than rely on it.
  for (VertexId v : s)
    if (budgets.sum(v) != degree_within(g, s, v)) return remember(nullptr);

  int p = f.parts();
  bool found_split = false;
  for (VertexId vstar : s) {
    std::vector<VertexSet> groups = split_groups(g, s, vstar);
    if (groups.size() < 2) continue;
    found_split = true;
    for (const VertexSet& group : groups) {
      VertexSet left_set = set_insert(group, vstar);
      VertexSet right_set = set_difference(s, group);
      int d_left = degree_within(g, left_set, vstar);
      const std::vector<int>& cap = budgets.at(vstar);
      CertificatePtr result;
      for_each_allocation(cap, d_left, [&](const std::vector<int>& a) {
        std::vector<int> b(cap.size());
        for (std::size_t i = 0; i < cap.size(); ++i) b[i] = cap[i] - a[i];
        BudgetView left_budgets = budgets;
        left_budgets.overrides[vstar] = a;
        CertificatePtr left = recognize_rec(g, f, left_set, std::move(left_budgets), memo);
        if (!left) return false;
        BudgetView right_budgets = budgets;
        right_budgets.overrides[vstar] = b;
        CertificatePtr right = recognize_rec(g, f, right_set, std::move(right_budgets), memo);
        if (!right) return false;
        auto cert = std::make_unique<Certificate>();
        cert->kind = Certificate::Kind::merge;
        cert->vertices = s;
        cert->merge_vertex = vstar;
        cert->left_budget = a;
        cert->right_budget = b;
        cert->left = std::move(left);
        cert->right = std::move(right);
        result = std::move(cert);
        return true;
      });
      if (result) return remember(std::move(result));
    }
  }
  if (found_split) return remember(nullptr);

  return remember(classify_block_impl(g, s, budgets, p));
}

}  // namespace detail

// Leaf classification for a standalone block B (connected, not splittable at
// any vertex). Throws when B can be split.
inline CertificatePtr classify_block(const Hypergraph& b, const VectorFunction& fb) {
  require_matching(b, fb);
  if (!is_connected(b)) throw std::invalid_argument("classify_block: input must be connected");
  VertexSet all = b.vertices();
  if (find_split_vertex(b, all) != 0)
    throw std::invalid_argument("classify_block: input has a separating vertex");
  detail::BudgetView budgets{&fb, {}};
  return detail::classify_block_impl(b, all, budgets, fb.parts());
}

// Decides whether the connected pair (G, f) is hard; returns a certificate
// tree or nullptr. Splits are searched at every mergeable vertex, peeling one
// group at a time; budget allocations at the merged vertex are pruned by side
// tightness (the side budget must sum to the side degree) and results are
// memoized per (side, allocation).
inline CertificatePtr recognize(const Hypergraph& g, const VectorFunction& f) {
  require_matching(g, f);
  if (!is_connected(g)) throw std::invalid_argument("recognize: input must be connected");
  if (!is_tight(g, f)) return nullptr;
  detail::RecognizeMemo memo;
  return detail::recognize_rec(g, f, g.vertices(), detail::BudgetView{&f, {}}, memo);
}

struct CheckResult {
  bool ok = false;
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

namespace detail {

inline CheckResult fail(std::string reason) { return CheckResult{false, std::move(reason)}; }

inline CheckResult check_rec(const Hypergraph& g, const VectorFunction& f,
                             const Certificate& cert, BudgetView budgets) {
  const VertexSet& s = cert.vertices;
  if (s.empty()) return fail("empty embedding");
  if (!is_sorted_unique(s)) return fail("embedding not a sorted vertex set");
  if (s.front() < 1 || s.back() > g.vertex_count()) return fail("embedding id out of range");
  int p = f.parts();

  switch (cert.kind) {
    case Certificate::Kind::merge: {
      if (!cert.left || !cert.right) return fail("merge node missing a child");
      const VertexSet& ls = cert.left->vertices;
      const VertexSet& rs = cert.right->vertices;
      if (set_union(ls, rs) != s) return fail("merge children do not cover the node");
      VertexSet inter = set_intersection(ls, rs);
      if (inter.size() != 1 || inter[0] != cert.merge_vertex)
        return fail("merge children must intersect exactly in the merged vertex");
      auto mask = make_mask(g, s);
      auto lmask = make_mask(g, ls);
      auto rmask = make_mask(g, rs);
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Hyperedge& edge = g.edge(e);
        if (!edge_inside(edge, mask)) continue;
        if (!edge_inside(edge, lmask) && !edge_inside(edge, rmask))
          return fail("edge crosses the merge split");
      }
      if (static_cast<int>(cert.left_budget.size()) != p ||
          static_cast<int>(cert.right_budget.size()) != p)
        return fail("merge budget width mismatch");
      const std::vector<int>& total = budgets.at(cert.merge_vertex);
      for (int i = 0; i < p; ++i) {
        if (cert.left_budget[i] < 0 || cert.right_budget[i] < 0)
          return fail("negative merge budget");
        if (cert.left_budget[i] + cert.right_budget[i] != total[i])
          return fail("merge budgets do not sum to the vertex budget");
      }
      BudgetView lview = budgets;
      lview.overrides[cert.merge_vertex] = cert.left_budget;
      if (CheckResult r = check_rec(g, f, *cert.left, std::move(lview)); !r) return r;
      BudgetView rview = budgets;
      rview.overrides[cert.merge_vertex] = cert.right_budget;
      return check_rec(g, f, *cert.right, std::move(rview));
    }
    case Certificate::Kind::block1: {
      if (cert.j < 1 || cert.j > p) return fail("block coordinate out of range");
      if (!is_connected_within(g, s)) return fail("block leaf not connected");
      if (find_split_vertex(g, s) != 0) return fail("block leaf is splittable");
      for (VertexId v : s) {
        const auto& row = budgets.at(v);
        int d = degree_within(g, s, v);
        for (int i = 1; i <= p; ++i) {
          int want = (i == cert.j) ? d : 0;
          if (row[i - 1] != want) return fail("block leaf budget mismatch");
        }
      }
      return CheckResult{true, ""};
    }
    case Certificate::Kind::complete: {
      if (cert.n != static_cast<int>(s.size())) return fail("complete leaf order mismatch");
      if (cert.n < 3) return fail("complete leaf needs n >= 3");
      if (cert.t < 1) return fail("complete leaf needs t >= 1");
      if (complete_multiplicity(g, s) != cert.t)
        return fail("leaf is not a t-fold complete graph with the stated t");
      if (static_cast<int>(cert.split.size()) != p) return fail("complete split width mismatch");
      int sum = 0, nonzero = 0;
      for (int x : cert.split) {
        if (x < 0) return fail("negative complete split entry");
        sum += x;
        if (x > 0) ++nonzero;
      }
      if (sum != cert.n - 1) return fail("complete split must sum to n-1");
      if (nonzero < 2) return fail("complete split needs at least two nonzero entries");
      for (VertexId v : s) {
        const auto& row = budgets.at(v);
        for (int i = 0; i < p; ++i)
          if (row[i] != cert.t * cert.split[i]) return fail("complete leaf budget mismatch");
      }
      return CheckResult{true, ""};
    }
    case Certificate::Kind::odd_cycle: {
      if (cert.n != static_cast<int>(s.size())) return fail("cycle leaf order mismatch");
      if (cert.n < 5 || cert.n % 2 == 0) return fail("cycle leaf needs odd n >= 5");
      if (cert.t < 1) return fail("cycle leaf needs t >= 1");
      if (cert.k < 1 || cert.k > p || cert.ell < 1 || cert.ell > p || cert.k == cert.ell)
        return fail("cycle coordinates must be two distinct part indices");
      if (cycle_multiplicity(g, s) != cert.t)
        return fail("leaf is not a t-fold cycle with the stated t");
      for (VertexId v : s) {
        const auto& row = budgets.at(v);
        for (int i = 1; i <= p; ++i) {
          int want = (i == cert.k || i == cert.ell) ? cert.t : 0;
          if (row[i - 1] != want) return fail("cycle leaf budget mismatch");
        }
      }
      return CheckResult{true, ""};
    }
  }
  return fail("unknown certificate kind");
}

}  // namespace detail

// Literal re-verification of a certificate against (G, f): embeddings,
// structure and budget arithmetic. Never throws on bad certificates; the
// result carries a reason.
inline CheckResult check_certificate(const Hypergraph& g, const VectorFunction& f,
                                     const Certificate& cert) {
  require_matching(g, f);
  if (cert.vertices != g.vertices())
    return detail::fail("root embedding must cover the whole vertex set");
  return detail::check_rec(g, f, cert, detail::BudgetView{&f, {}});
}

namespace detail {

inline void print_ints(std::ostream& os, const std::vector<int>& xs, char sep) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
}

inline void serialize_rec(std::ostream& os, const Certificate& cert, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
  switch (cert.kind) {
    case Certificate::Kind::block1:
      os << "block1(j=" << cert.j << ")";
      break;
    case Certificate::Kind::complete:
      os << "complete(t=" << cert.t << ", n=" << cert.n << ", split=";
      print_ints(os, cert.split, ',');
      os << ")";
      break;
    case Certificate::Kind::odd_cycle:
      os << "oddcycle(t=" << cert.t << ", n=" << cert.n << ", k=" << cert.k << ", l=" << cert.ell
         << ")";
      break;
    case Certificate::Kind::merge:
      os << "merge(v*=" << cert.merge_vertex << ", left=";
      print_ints(os, cert.left_budget, ',');
      os << ", right=";
      print_ints(os, cert.right_budget, ',');
      os << ")";
      break;
  }
  os << " [";
  print_ints(os, cert.vertices, ' ');
  os << "]\n";
  if (cert.kind == Certificate::Kind::merge) {
    serialize_rec(os, *cert.left, depth + 1);
    serialize_rec(os, *cert.right, depth + 1);
  }
}

}  // namespace detail

// Indented one-node-per-line tree, stable across runs.
inline std::string serialize_certificate(const Certificate& cert) {
  std::ostringstream os;
  detail::serialize_rec(os, cert, 0);
  return os.str();
}

}  // namespace degpart
