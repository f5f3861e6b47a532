#include "antikit/simple_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "antikit/errors.hpp"

namespace antikit {

SimpleGraph SimpleGraph::validate(const std::vector<VertexId>& vertices,
                                  const std::vector<std::pair<VertexId, VertexId>>& edges) {
  SimpleGraph g;
  g.vertices_ = VertexSet(vertices);
  if (g.vertices_.size() != vertices.size()) {
    fail(ErrorKind::OverlappingPartition, "duplicate vertex in list");
  }

  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [a, b] : edges) {
    if (!g.vertices_.contains(a)) fail(ErrorKind::UnknownVertex, std::to_string(a));
    if (!g.vertices_.contains(b)) fail(ErrorKind::UnknownVertex, std::to_string(b));
    if (a == b) fail(ErrorKind::IllegalEdge, "loop at " + std::to_string(a));
    auto canonical = std::minmax(a, b);
    if (!seen.insert({canonical.first, canonical.second}).second) {
      fail(ErrorKind::DuplicateEdge,
           std::to_string(canonical.first) + "-" + std::to_string(canonical.second));
    }
  }
  g.edges_.assign(seen.begin(), seen.end());

  for (VertexId v : g.vertices_) g.adj_[v] = VertexSet{};
  for (auto [a, b] : g.edges_) {
    g.adj_[a] = g.adj_[a].with(b);
    g.adj_[b] = g.adj_[b].with(a);
  }
  return g;
}

bool SimpleGraph::adjacent(VertexId u, VertexId v) const { return neighbors(u).contains(v); }

const VertexSet& SimpleGraph::neighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) fail(ErrorKind::UnknownVertex, std::to_string(v));
  return it->second;
}

}  // namespace antikit
