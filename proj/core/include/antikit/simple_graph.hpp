#pragma once

#include <map>
#include <utility>
#include <vector>

#include "antikit/vertex_set.hpp"

namespace antikit {

/// Arbitrary simple graph with explicit edges. Used where no split structure
/// is assumed (monophonic convexity on general graphs).
class SimpleGraph {
 public:
  static SimpleGraph validate(const std::vector<VertexId>& vertices,
                              const std::vector<std::pair<VertexId, VertexId>>& edges);

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  bool has_vertex(VertexId v) const { return vertices_.contains(v); }
  bool adjacent(VertexId u, VertexId v) const;
  const VertexSet& neighbors(VertexId v) const;

 private:
  SimpleGraph() = default;

  VertexSet vertices_;
  std::vector<std::pair<VertexId, VertexId>> edges_;  // (min, max), sorted
  std::map<VertexId, VertexSet> adj_;
};

}  // namespace antikit
