#pragma once

// Shared test helpers: fixtures, deterministic random instances, and
// brute-force oracles kept independent of the library code paths they check.

#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "antikit/closure_opt.hpp"
#include "antikit/detail/dense_index.hpp"
#include "antikit/feasibility.hpp"
#include "antikit/hardness.hpp"
#include "antikit/io.hpp"
#include "antikit/poset.hpp"
#include "antikit/set_family.hpp"
#include "antikit/simple_graph.hpp"
#include "antikit/split_graph.hpp"
#include "antikit/structure.hpp"

namespace testkit {

using namespace antikit;

// ---------------------------------------------------------------------------
// Deterministic randomness (avoid std distributions; their sequences are
// implementation defined).

inline std::uint32_t rng_below(std::mt19937& rng, std::uint32_t n) {
  return n == 0 ? 0 : rng() % n;
}

template <typename T>
void rng_shuffle(std::mt19937& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng_below(rng, static_cast<std::uint32_t>(i))]);
  }
}

// ---------------------------------------------------------------------------
// Fixtures.

// K = {1,2,3}, I = {4,5,6}, cross edges 1-4 1-5 2-5 2-6 3-6.
inline SplitGraph example_graph() {
  return SplitGraph::validate({1, 2, 3}, {4, 5, 6}, {{1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}});
}

// k1..k3 = 1..3, i1..i3 = 4..6; cross edges i1-k2, i1-k3, i2-k1, i2-k3, i3-k1.
inline SplitGraph forced_set_figure_graph() {
  return SplitGraph::validate({1, 2, 3}, {4, 5, 6}, {{4, 2}, {4, 3}, {5, 1}, {5, 3}, {6, 1}});
}

// Chordal 2-connected 9-vertex graph whose set {1,2,3} has a non-clique
// neighborhood while the complement of {1,2,3} is m-convex.
inline SimpleGraph convexity_counterexample_graph() {
  std::vector<std::pair<VertexId, VertexId>> edges = {
      {4, 1}, {1, 7}, {7, 4}, {4, 5}, {5, 2}, {2, 8}, {8, 5}, {5, 6},
      {6, 3}, {3, 9}, {9, 6}, {7, 8}, {8, 9}, {7, 5}, {5, 9}};
  return SimpleGraph::validate({1, 2, 3, 4, 5, 6, 7, 8, 9}, edges);
}

inline VertexSet counterexample_convex_part() { return VertexSet{4, 5, 6, 7, 8, 9}; }

// ---------------------------------------------------------------------------
// Random instances.

inline SplitGraph random_split_graph(std::mt19937& rng, int min_v, int max_v) {
  int n = min_v + static_cast<int>(rng_below(rng, static_cast<std::uint32_t>(max_v - min_v + 1)));
  std::vector<VertexId> ids;
  bool scattered = rng_below(rng, 4) == 0;  // exercise non-contiguous labels
  for (int j = 0; j < n; ++j) ids.push_back(scattered ? 3 * j + 2 : j + 1);
  rng_shuffle(rng, ids);

  int k_size = static_cast<int>(rng_below(rng, static_cast<std::uint32_t>(n + 1)));
  std::vector<VertexId> clique(ids.begin(), ids.begin() + k_size);
  std::vector<VertexId> independent(ids.begin() + k_size, ids.end());

  std::uint32_t percent = 10 + rng_below(rng, 70);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId k : clique) {
    for (VertexId i : independent) {
      if (rng_below(rng, 100) < percent) edges.emplace_back(k, i);
    }
  }
  return SplitGraph::validate(clique, independent, edges);
}

inline WeightFn random_int_weights(std::mt19937& rng, const VertexSet& ground, int lo, int hi) {
  WeightFn w;
  for (VertexId v : ground) {
    int value = lo + static_cast<int>(rng_below(rng, static_cast<std::uint32_t>(hi - lo + 1)));
    w.set(v, Rational(value));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Independent feasibility oracle: grow sets one simplicial vertex at a time,
// using nothing but plain adjacency.

struct DenseAdjacency {
  detail::DenseIndex index;
  std::vector<std::uint64_t> adj;

  explicit DenseAdjacency(const SplitGraph& g) : index(g.vertices()) {
    adj.resize(static_cast<std::size_t>(index.size()));
    for (int p = 0; p < index.size(); ++p) {
      adj[static_cast<std::size_t>(p)] = index.mask_of(g.neighbors(VertexSet{index.id(p)}));
    }
  }
};

inline bool simplicial_after_removal(const DenseAdjacency& d, std::uint64_t removed, int v) {
  std::uint64_t nb = d.adj[static_cast<std::size_t>(v)] & ~removed;
  for (std::uint64_t rest = nb; rest != 0; rest &= rest - 1) {
    int a = std::countr_zero(rest);
    if ((nb & ~(std::uint64_t{1} << a) & ~d.adj[static_cast<std::size_t>(a)]) != 0) return false;
  }
  return true;
}

inline SetFamily enumerate_feasible_by_shelling(const SplitGraph& g) {
  DenseAdjacency d(g);
  int n = d.index.size();
  std::set<std::uint64_t> reached{0};
  std::queue<std::uint64_t> work;
  work.push(0);
  while (!work.empty()) {
    std::uint64_t removed = work.front();
    work.pop();
    for (int v = 0; v < n; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (removed & bit) continue;
      if (!simplicial_after_removal(d, removed, v)) continue;
      std::uint64_t next = removed | bit;
      if (reached.insert(next).second) work.push(next);
    }
  }
  std::vector<VertexSet> sets;
  sets.reserve(reached.size());
  for (std::uint64_t m : reached) sets.push_back(d.index.set_of(m));
  return SetFamily(g.vertices(), std::move(sets));
}

// ---------------------------------------------------------------------------
// Brute-force filter enumeration (subset scan against is_filter only).

inline SetFamily enumerate_filters_brute(const Poset& p) {
  detail::DenseIndex index(p.ground());
  std::vector<VertexSet> filters;
  std::uint64_t full = index.full_mask();
  std::uint64_t m = 0;
  while (true) {
    VertexSet s = index.set_of(m);
    if (p.is_filter(s)) filters.push_back(std::move(s));
    if (m == full) break;
    ++m;
  }
  return SetFamily(p.ground(), std::move(filters));
}

// ---------------------------------------------------------------------------
// Optimization oracle with the library's declared tie-break.

struct BruteOpt {
  VertexSet set;
  Rational weight;
};

inline BruteOpt brute_best(const SetFamily& family, const WeightFn& w, bool minimize = false) {
  std::optional<BruteOpt> best;
  for (const VertexSet& s : family.sets()) {
    Rational value = w.sum(s);
    Rational keyed = minimize ? -value : value;
    if (!best || keyed > (minimize ? -best->weight : best->weight) ||
        (keyed == (minimize ? -best->weight : best->weight) && family_less(s, best->set))) {
      best = BruteOpt{s, value};
    }
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Trace-defined oracles for paths, circuits and free sets.

struct FamilyMasks {
  detail::DenseIndex index;
  std::vector<std::uint64_t> masks;

  explicit FamilyMasks(const SetFamily& family) : index(family.ground()) {
    masks.reserve(family.size());
    for (const VertexSet& s : family.sets()) masks.push_back(index.mask_of(s));
  }
};

inline std::set<std::uint64_t> trace_masks(const FamilyMasks& fm, std::uint64_t x) {
  std::set<std::uint64_t> out;
  for (std::uint64_t m : fm.masks) out.insert(m & x);
  return out;
}

inline bool free_oracle(const FamilyMasks& fm, std::uint64_t x) {
  return trace_masks(fm, x).size() == (std::uint64_t{1} << std::popcount(x));
}

// All (support, root) pairs whose trace misses exactly the root singleton.
inline std::vector<std::pair<VertexSet, VertexId>> circuit_oracle(const FamilyMasks& fm) {
  std::vector<std::pair<VertexSet, VertexId>> out;
  std::uint64_t full = fm.index.size() == 0
                           ? 0
                           : (~std::uint64_t{0} >> (64 - fm.index.size()));
  for (std::uint64_t c = 1;; ++c) {
    if (c > full) break;
    if ((c & full) != c) continue;
    auto tr = trace_masks(fm, c);
    if (tr.size() != (std::uint64_t{1} << std::popcount(c)) - 1) continue;
    for (std::uint64_t rest = c; rest != 0; rest &= rest - 1) {
      std::uint64_t bit = rest & (~rest + 1);
      if (!tr.count(bit)) {
        out.emplace_back(fm.index.set_of(c & ~bit),
                         fm.index.id(std::countr_zero(bit)));
        break;
      }
    }
  }
  return out;
}

// Feasible sets that are not unions of proper nonempty feasible subsets.
inline std::vector<VertexSet> path_oracle(const SetFamily& family) {
  FamilyMasks fm(family);
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < fm.masks.size(); ++i) {
    std::uint64_t f = fm.masks[i];
    if (f == 0) continue;
    std::uint64_t covered = 0;
    for (std::uint64_t other : fm.masks) {
      if (other != f && (other & ~f) == 0) covered |= other;
    }
    if (covered != f) out.push_back(family.sets()[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hardness-side oracles.

inline SetFamily reduction_family(const hardness::ReductionInstance& inst) {
  hardness::ElementSet ground = inst.ground();
  detail::DenseIndex index(ground);  // identity, elements are already dense
  int nv = inst.graph().vertex_count();
  std::vector<std::pair<int, int>> edges = inst.graph().edges();

  std::vector<VertexSet> sets;
  std::uint64_t full = index.full_mask();
  std::uint64_t m = 0;
  while (true) {
    bool ok = true;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!(m & (std::uint64_t{1} << (nv + e)))) continue;
      if (!(m & (std::uint64_t{1} << edges[e].first)) &&
          !(m & (std::uint64_t{1} << edges[e].second))) {
        ok = false;
        break;
      }
    }
    if (ok) sets.push_back(index.set_of(m));
    if (m == full) break;
    ++m;
  }
  return SetFamily(ground, std::move(sets));
}

inline int max_independent_set_size(const hardness::SourceGraph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool independent = true;
    for (auto [a, b] : g.edges()) {
      if ((m >> a & 1) && (m >> b & 1)) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, std::popcount(m));
  }
  return best;
}

inline hardness::SourceGraph random_source_graph(std::mt19937& rng, int max_vertices,
                                                 int max_total_elements) {
  int n = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint32_t>(max_vertices)));
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j) names.push_back("v" + std::to_string(j));
  std::vector<std::pair<std::string, std::string>> all_pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) all_pairs.emplace_back(names[a], names[b]);
  }
  rng_shuffle(rng, all_pairs);
  int budget = max_total_elements - n;
  std::uint32_t target = rng_below(rng, static_cast<std::uint32_t>(all_pairs.size() + 1));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : all_pairs) {
    if (static_cast<int>(edges.size()) >= budget) break;
    if (edges.size() >= target) break;
    edges.push_back(e);
  }
  return hardness::SourceGraph::validate(names, edges);
}

}  // namespace testkit
