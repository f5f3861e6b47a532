#include "antikit/feasibility.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "antikit/detail/dense_index.hpp"
#include "antikit/errors.hpp"

namespace antikit {

namespace {

void check_subset(const SplitGraph& g, const VertexSet& s) {
  if (!s.subset_of(g.vertices())) {
    fail(ErrorKind::UnknownVertex, "set contains ids outside the graph");
  }
}

void check_enumeration_bound(std::size_t n, const BruteForceLimits& limits) {
  int bound = std::min(limits.subset_enumeration_max, 62);
  if (static_cast<int>(n) > bound) {
    fail(ErrorKind::GroundSetTooLarge, std::to_string(n) + " vertices exceeds the subset "
                                           "enumeration bound of " + std::to_string(bound));
  }
}

}  // namespace

BruteForceLimits BruteForceLimits::from_env() {
  BruteForceLimits limits;
  if (const char* raw = std::getenv("ANTIKIT_BRUTE_LIMIT")) {
    int v = std::atoi(raw);
    if (v > 0) {
      limits.subset_enumeration_max = v;
      limits.chordless_path_max = v;
    }
  }
  return limits;
}

bool is_feasible(const SplitGraph& g, const VertexSet& f) {
  check_subset(g, f);
  VertexSet outside = g.neighbors(f);
  // K is a clique, so N(f) induces a clique iff it meets I at most once and
  // that I vertex sees every K vertex of N(f).
  VertexSet in_i = outside.intersect(g.independent());
  if (in_i.empty()) return true;
  if (in_i.size() > 1) return false;
  VertexId i = *in_i.begin();
  return outside.intersect(g.clique()).subset_of(g.cross_neighbors(i));
}

Shelling shelling(const SplitGraph& g, const VertexSet& f) {
  if (!is_feasible(g, f)) {
    fail(ErrorKind::NotFeasible, "no simplicial shelling exists for this set");
  }
  VertexSet f_i = f.intersect(g.independent());
  VertexSet f_k = f.intersect(g.clique());
  VertexSet blocked = g.neighbors(g.independent().difference(f));

  Shelling out;
  out.order.reserve(f.size());
  for (VertexId v : f_i) out.order.push_back(v);
  for (VertexId v : f_k.difference(blocked)) out.order.push_back(v);
  for (VertexId v : f_k.intersect(blocked)) out.order.push_back(v);
  return out;
}

bool is_simplicial_shelling(const SplitGraph& g, const std::vector<VertexId>& order) {
  VertexSet removed;
  for (VertexId v : order) {
    if (!g.has_vertex(v) || removed.contains(v)) return false;
    VertexSet nbrs = g.neighbors(VertexSet{v}).difference(removed);
    for (VertexId a : nbrs) {
      for (VertexId b : nbrs) {
        if (a < b && !g.adjacent(a, b)) return false;
      }
    }
    removed = removed.with(v);
  }
  return true;
}

VertexSet fos(const SplitGraph& g, VertexId i) {
  if (!g.has_vertex(i)) fail(ErrorKind::UnknownVertex, std::to_string(i));
  if (!g.in_independent(i)) {
    fail(ErrorKind::NotIndependentVertex, std::to_string(i) + " is not in I");
  }
  const VertexSet& n_i = g.cross_neighbors(i);
  std::vector<VertexId> out;
  for (VertexId k : g.clique()) {
    if (!n_i.contains(k)) out.push_back(k);
  }
  for (VertexId j : g.independent()) {
    if (j == i) continue;
    if (!g.cross_neighbors(j).subset_of(n_i)) out.push_back(j);
  }
  return VertexSet(std::move(out));
}

VertexSet ufs(const SplitGraph& g, VertexId i) {
  return g.vertices().difference(fos(g, i)).without(i);
}

FeasibleClass classify(const SplitGraph& g, const VertexSet& f) {
  if (!is_feasible(g, f)) fail(ErrorKind::NotFeasible, "cannot classify an infeasible set");
  VertexSet in_i = g.neighbors(f).intersect(g.independent());
  if (in_i.empty()) return FeasibleClass::star();
  return FeasibleClass::i_feasible(*in_i.begin());
}

SetFamily enumerate_feasible(const SplitGraph& g, const BruteForceLimits& limits) {
  check_enumeration_bound(g.vertex_count(), limits);
  detail::DenseIndex index(g.vertices());
  int n = index.size();

  std::uint64_t k_mask = index.mask_of(g.clique());
  std::uint64_t i_mask = index.mask_of(g.independent());
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    adj[static_cast<std::size_t>(p)] = index.mask_of(g.neighbors(VertexSet{index.id(p)}));
  }

  std::vector<std::uint64_t> feasible;
  // Depth-first include/exclude walk carrying the neighborhood union of the
  // chosen prefix, so each leaf costs O(1).
  struct Frame {
    int depth;
    std::uint64_t members;
    std::uint64_t nbrs;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, 0});
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (fr.depth == n) {
      std::uint64_t outside = fr.nbrs & ~fr.members;
      std::uint64_t out_i = outside & i_mask;
      if (out_i == 0) {
        feasible.push_back(fr.members);
      } else if (std::popcount(out_i) == 1) {
        int i = std::countr_zero(out_i);
        if ((outside & k_mask & ~adj[static_cast<std::size_t>(i)]) == 0) {
          feasible.push_back(fr.members);
        }
      }
      continue;
    }
    std::uint64_t bit = std::uint64_t{1} << fr.depth;
    stack.push_back({fr.depth + 1, fr.members, fr.nbrs});
    stack.push_back(
        {fr.depth + 1, fr.members | bit, fr.nbrs | adj[static_cast<std::size_t>(fr.depth)]});
  }

  std::vector<VertexSet> sets;
  sets.reserve(feasible.size());
  for (std::uint64_t m : feasible) sets.push_back(index.set_of(m));
  return SetFamily(g.vertices(), std::move(sets));
}

AxiomCheck verify_antimatroid(const SetFamily& family) {
  AxiomCheck report;
  auto violate = [&report](AxiomCheck::Axiom axiom, std::vector<VertexSet> witnesses) {
    report.ok = false;
    report.violated = axiom;
    report.witnesses = std::move(witnesses);
  };

  if (!family.contains(family.ground())) {
    violate(AxiomCheck::Axiom::GroundMembership, {family.ground()});
    return report;
  }

  if (family.ground().size() <= 22) {
    // Mask-indexed membership makes the pairwise union scan cheap.
    detail::DenseIndex index(family.ground());
    std::vector<std::uint64_t> masks;
    masks.reserve(family.size());
    for (const VertexSet& s : family.sets()) masks.push_back(index.mask_of(s));
    std::vector<std::uint8_t> member(std::size_t{1} << index.size(), 0);
    for (std::uint64_t m : masks) member[m] = 1;

    for (std::size_t a = 0; a < masks.size(); ++a) {
      for (std::size_t b = a + 1; b < masks.size(); ++b) {
        std::uint64_t u = masks[a] | masks[b];
        if (!member[u]) {
          violate(AxiomCheck::Axiom::UnionClosure,
                  {index.set_of(masks[a]), index.set_of(masks[b])});
          return report;
        }
      }
    }
    for (std::uint64_t m : masks) {
      if (m == 0) continue;
      bool accessible = false;
      for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
        std::uint64_t bit = rest & (~rest + 1);
        if (member[m & ~bit]) {
          accessible = true;
          break;
        }
      }
      if (!accessible) {
        violate(AxiomCheck::Axiom::Accessibility, {index.set_of(m)});
        return report;
      }
    }
    return report;
  }

  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      VertexSet u = family.sets()[a].unite(family.sets()[b]);
      if (!family.contains(u)) {
        violate(AxiomCheck::Axiom::UnionClosure, {family.sets()[a], family.sets()[b]});
        return report;
      }
    }
  }
  for (const VertexSet& s : family.sets()) {
    if (s.empty()) continue;
    bool accessible = false;
    for (VertexId v : s) {
      if (family.contains(s.without(v))) {
        accessible = true;
        break;
      }
    }
    if (!accessible) {
      violate(AxiomCheck::Axiom::Accessibility, {s});
      return report;
    }
  }
  return report;
}

namespace {

// Depth-first enumeration of induced paths starting at `start`. Reports a
// violation as soon as a path reaches another member of `c` after leaving it.
bool induced_path_escapes(const std::vector<std::vector<int>>& adj,
                          const std::vector<std::uint8_t>& in_c, int start) {
  int n = static_cast<int>(adj.size());
  std::vector<int> path{start};
  std::vector<std::uint8_t> on_path(static_cast<std::size_t>(n), 0);
  on_path[static_cast<std::size_t>(start)] = 1;

  struct Frame {
    int node;
    std::size_t next = 0;
    bool outside_seen;  // some internal vertex of the current path is outside c
  };
  std::vector<Frame> stack{{start, 0, false}};
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const auto& nbrs = adj[static_cast<std::size_t>(fr.node)];
    if (fr.next >= nbrs.size()) {
      on_path[static_cast<std::size_t>(fr.node)] = 0;
      path.pop_back();
      stack.pop_back();
      continue;
    }
    int w = nbrs[fr.next++];
    if (on_path[static_cast<std::size_t>(w)]) continue;
    bool chord = false;
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      int p = path[j];
      if (std::binary_search(adj[static_cast<std::size_t>(w)].begin(),
                             adj[static_cast<std::size_t>(w)].end(), p)) {
        chord = true;
        break;
      }
    }
    if (chord) continue;
    bool outside = fr.outside_seen || !in_c[static_cast<std::size_t>(fr.node)];
    // fr.node is internal once w extends the path; the start vertex is not.
    if (path.size() == 1) outside = fr.outside_seen;
    if (in_c[static_cast<std::size_t>(w)] && outside) return true;
    path.push_back(w);
    on_path[static_cast<std::size_t>(w)] = 1;
    stack.push_back({w, 0, outside});
  }
  return false;
}

bool m_convex_impl(const VertexSet& vertices, const VertexSet& c,
                   const std::vector<std::vector<int>>& adj, const BruteForceLimits& limits) {
  int bound = std::min(limits.chordless_path_max, 62);
  if (static_cast<int>(vertices.size()) > bound) {
    fail(ErrorKind::GroundSetTooLarge,
         std::to_string(vertices.size()) + " vertices exceeds the chordless-path bound of " +
             std::to_string(bound));
  }
  if (c.size() <= 1) return true;

  detail::DenseIndex index(vertices);
  std::vector<std::uint8_t> in_c(static_cast<std::size_t>(index.size()), 0);
  for (VertexId v : c) in_c[static_cast<std::size_t>(index.pos(v))] = 1;
  for (VertexId v : c) {
    if (induced_path_escapes(adj, in_c, index.pos(v))) return false;
  }
  return true;
}

}  // namespace

bool is_m_convex(const SplitGraph& g, const VertexSet& c, const BruteForceLimits& limits) {
  check_subset(g, c);
  detail::DenseIndex index(g.vertices());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(index.size()));
  for (int p = 0; p < index.size(); ++p) {
    for (VertexId w : g.neighbors(VertexSet{index.id(p)})) {
      adj[static_cast<std::size_t>(p)].push_back(index.pos(w));
    }
  }
  return m_convex_impl(g.vertices(), c, adj, limits);
}

bool is_m_convex(const SimpleGraph& g, const VertexSet& c, const BruteForceLimits& limits) {
  if (!c.subset_of(g.vertices())) {
    fail(ErrorKind::UnknownVertex, "set contains ids outside the graph");
  }
  detail::DenseIndex index(g.vertices());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(index.size()));
  for (int p = 0; p < index.size(); ++p) {
    for (VertexId w : g.neighbors(index.id(p))) {
      adj[static_cast<std::size_t>(p)].push_back(index.pos(w));
    }
  }
  return m_convex_impl(g.vertices(), c, adj, limits);
}

}  // namespace antikit
