#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "antikit/vertex_set.hpp"

namespace antikit {

/// A graph whose vertex set is partitioned into a clique K and an independent
/// set I. Edges inside K are implied and never stored; only K-I cross edges
/// are explicit, which gives each split graph exactly one encoding.
///
/// Immutable after construction; safe for concurrent reads.
class SplitGraph {
 public:
  /// Checks the partition and edge list and builds the graph.
  /// Rejects K-K edges (implied, must not be listed), I-I edges, unknown
  /// endpoints, duplicate edges and overlapping K/I lists.
  static SplitGraph validate(const std::vector<VertexId>& clique,
                             const std::vector<VertexId>& independent,
                             const std::vector<std::pair<VertexId, VertexId>>& cross_edges);

  const VertexSet& clique() const { return clique_; }
  const VertexSet& independent() const { return independent_; }
  const VertexSet& vertices() const { return vertices_; }
  /// Cross edges in canonical (k, i) orientation, sorted.
  const std::vector<std::pair<VertexId, VertexId>>& cross_edges() const { return cross_edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  bool has_vertex(VertexId v) const { return vertices_.contains(v); }
  bool in_clique(VertexId v) const { return clique_.contains(v); }
  bool in_independent(VertexId v) const { return independent_.contains(v); }

  bool adjacent(VertexId u, VertexId v) const;
  /// Neighbors across the partition only (for k in K its I-neighbors, for i
  /// in I its K-neighbors).
  const VertexSet& cross_neighbors(VertexId v) const;

  VertexSet neighbors(VertexId v) const;
  /// N(S): vertices outside S adjacent to some member of S.
  VertexSet neighbors(const VertexSet& s) const;
  bool is_isolated(VertexId v) const;

  /// Moves every i in I with N(i) = K into the clique (smallest id first,
  /// re-scanning after each move) until no such vertex remains or K is empty.
  /// Vertex ids are preserved; absorbed cross edges become implied.
  SplitGraph normalized() const;

  /// All pairs inside K plus the cross edges, each pair (min, max), sorted.
  std::vector<std::pair<VertexId, VertexId>> implied_edges() const;

  bool operator==(const SplitGraph&) const = default;

 private:
  SplitGraph() = default;

  VertexSet clique_;
  VertexSet independent_;
  VertexSet vertices_;
  std::vector<std::pair<VertexId, VertexId>> cross_edges_;
  std::map<VertexId, VertexSet> cross_adj_;
};

}  // namespace antikit
