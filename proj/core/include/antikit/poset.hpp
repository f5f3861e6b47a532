#pragma once

#include <utility>
#include <vector>

#include "antikit/feasibility.hpp"
#include "antikit/set_family.hpp"
#include "antikit/split_graph.hpp"
#include "antikit/vertex_set.hpp"

namespace antikit {

/// Strict order of height at most two, stored as explicit cover pairs
/// (u, v) meaning u < v. At this height the covers are the whole order, so
/// filter checks run on covers alone. Construction rejects reflexive pairs
/// and any element appearing both as a source and as a target.
class Poset {
 public:
  Poset(VertexSet ground, std::vector<std::pair<VertexId, VertexId>> covers);

  const VertexSet& ground() const { return ground_; }
  const std::vector<std::pair<VertexId, VertexId>>& covers() const { return covers_; }

  /// Elements above v; empty for maximal elements.
  VertexSet successors(VertexId v) const;

  /// True iff s is upward closed.
  bool is_filter(const VertexSet& s) const;

  /// Induced subposet on s.
  Poset restrict(const VertexSet& s) const;

  /// All filters, canonically ordered.
  SetFamily enumerate_filters(const BruteForceLimits& limits = {}) const;

  bool operator==(const Poset&) const = default;

 private:
  void check_member(VertexId v) const;

  VertexSet ground_;
  std::vector<std::pair<VertexId, VertexId>> covers_;  // sorted (u, v)
};

/// The order underlying the feasible-set decomposition: k < i exactly for
/// the cross edges, oriented from the clique into the independent set.
Poset build_prec(const SplitGraph& g);

}  // namespace antikit
