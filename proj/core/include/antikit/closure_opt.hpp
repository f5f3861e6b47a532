#pragma once

#include <map>
#include <vector>

#include "antikit/feasibility.hpp"
#include "antikit/poset.hpp"
#include "antikit/rational.hpp"
#include "antikit/split_graph.hpp"
#include "antikit/vertex_set.hpp"

namespace antikit {

/// Total weight assignment on a vertex set.
class WeightFn {
 public:
  WeightFn() = default;

  void set(VertexId v, Rational w) { weights_[v] = std::move(w); }
  bool has(VertexId v) const { return weights_.count(v) != 0; }

  /// Throws MissingWeight when v has no assigned weight.
  const Rational& at(VertexId v) const;

  Rational sum(const VertexSet& s) const;
  Rational abs_total() const;

  const std::map<VertexId, Rational>& entries() const { return weights_; }

  static WeightFn uniform(const VertexSet& ground, const Rational& w);

 private:
  std::map<VertexId, Rational> weights_;
};

/// Source/sink digraph with non-negative capacities. "Infinite" capacities
/// are encoded by callers as a finite sentinel larger than any possible cut.
class FlowNetwork {
 public:
  FlowNetwork(int node_count, int source, int sink);

  /// Rejects negative capacities, arcs into the source, arcs out of the
  /// sink, and loops.
  void add_arc(int from, int to, Rational capacity);

  int node_count() const { return node_count_; }
  int source() const { return source_; }
  int sink() const { return sink_; }

  struct Arc {
    int from;
    int to;
    Rational capacity;
  };
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  int node_count_;
  int source_;
  int sink_;
  std::vector<Arc> arcs_;
};

struct MaxFlowResult {
  Rational value;
  /// Source side of a minimum cut: the nodes reachable from the source in
  /// the residual network (the inclusion-minimal minimum cut), sorted.
  std::vector<int> source_side;
};

/// Dinic's algorithm. Exact on rational capacities and deterministic for a
/// fixed arc insertion order.
MaxFlowResult max_flow(const FlowNetwork& net);

struct ClosureResult {
  VertexSet filter;
  Rational weight;
};

/// Maximum-weight filter of the poset among filters containing `forced`
/// (empty forced set = unconstrained; the empty filter with weight 0 is then
/// a legal answer). Among optimal filters the inclusion-minimal one is
/// returned. Reduction: positive elements hang off the source, negative
/// elements feed the sink, covers become uncrossable arcs oriented so that
/// the source side is upward closed; forced elements get uncrossable source
/// arcs. Throws ForcedNotClosed when forced is not inside the ground set.
ClosureResult max_closure(const Poset& poset, const WeightFn& weights,
                          const VertexSet& forced = VertexSet{});

enum class OptSense { Max, Min };

struct OptResult {
  VertexSet best_set;
  Rational best_weight;
  FeasibleClass feasible_class;
};

/// Optimal feasible set of the shelling antimatroid of g: one unconstrained
/// closure solve for the star class, then per i in I with N(i) nonempty a
/// solve on the order restricted to ufs(i), forcing single clique vertices
/// only when the unconstrained answer misses K. Ties across candidates break
/// toward smaller size, then lexicographic members. Minimization runs the
/// same machinery on negated weights.
OptResult max_weight_feasible(const SplitGraph& g, const WeightFn& weights,
                              OptSense sense = OptSense::Max);

}  // namespace antikit
