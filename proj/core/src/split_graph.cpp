#include "antikit/split_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "antikit/errors.hpp"

namespace antikit {

namespace {

std::string id_str(VertexId v) { return std::to_string(v); }

std::string edge_str(VertexId a, VertexId b) { return id_str(a) + "-" + id_str(b); }

void reject_duplicates(const std::vector<VertexId>& ids, const char* side) {
  std::vector<VertexId> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    fail(ErrorKind::OverlappingPartition,
         "vertex " + id_str(*dup) + " listed twice in " + side);
  }
}

}  // namespace

SplitGraph SplitGraph::validate(const std::vector<VertexId>& clique,
                                const std::vector<VertexId>& independent,
                                const std::vector<std::pair<VertexId, VertexId>>& cross_edges) {
  reject_duplicates(clique, "K");
  reject_duplicates(independent, "I");
  for (VertexId v : clique) {
    if (v < 0) fail(ErrorKind::Parse, "negative vertex id " + id_str(v));
  }
  for (VertexId v : independent) {
    if (v < 0) fail(ErrorKind::Parse, "negative vertex id " + id_str(v));
  }

  SplitGraph g;
  g.clique_ = VertexSet(clique);
  g.independent_ = VertexSet(independent);
  VertexSet overlap = g.clique_.intersect(g.independent_);
  if (!overlap.empty()) {
    fail(ErrorKind::OverlappingPartition,
         "vertex " + id_str(*overlap.begin()) + " is in both K and I");
  }
  g.vertices_ = g.clique_.unite(g.independent_);

  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [a, b] : cross_edges) {
    if (!g.has_vertex(a)) fail(ErrorKind::UnknownVertex, id_str(a) + " in edge " + edge_str(a, b));
    if (!g.has_vertex(b)) fail(ErrorKind::UnknownVertex, id_str(b) + " in edge " + edge_str(a, b));
    bool a_k = g.in_clique(a);
    bool b_k = g.in_clique(b);
    if (a_k == b_k) {
      fail(ErrorKind::IllegalEdge, edge_str(a, b) + (a_k ? " joins K to K (clique edges are implied)"
                                                         : " joins I to I"));
    }
    std::pair<VertexId, VertexId> canonical = a_k ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!seen.insert(canonical).second) {
      fail(ErrorKind::DuplicateEdge, edge_str(canonical.first, canonical.second));
    }
  }
  g.cross_edges_.assign(seen.begin(), seen.end());

  for (VertexId v : g.vertices_) g.cross_adj_[v] = VertexSet{};
  for (auto [k, i] : g.cross_edges_) {
    g.cross_adj_[k] = g.cross_adj_[k].with(i);
    g.cross_adj_[i] = g.cross_adj_[i].with(k);
  }
  return g;
}

bool SplitGraph::adjacent(VertexId u, VertexId v) const {
  if (u == v) return false;
  if (in_clique(u) && in_clique(v)) return true;
  return cross_neighbors(u).contains(v);
}

const VertexSet& SplitGraph::cross_neighbors(VertexId v) const {
  auto it = cross_adj_.find(v);
  if (it == cross_adj_.end()) fail(ErrorKind::UnknownVertex, id_str(v));
  return it->second;
}

VertexSet SplitGraph::neighbors(VertexId v) const {
  const VertexSet& cross = cross_neighbors(v);
  if (in_clique(v)) return clique_.without(v).unite(cross);
  return cross;
}

VertexSet SplitGraph::neighbors(const VertexSet& s) const {
  if (!s.subset_of(vertices_)) {
    fail(ErrorKind::UnknownVertex, "set contains ids outside the graph");
  }
  VertexSet acc;
  bool touches_clique = false;
  for (VertexId v : s) {
    acc = acc.unite(cross_neighbors(v));
    if (in_clique(v)) touches_clique = true;
  }
  if (touches_clique && clique_.size() > 1) acc = acc.unite(clique_);
  return acc.difference(s);
}

bool SplitGraph::is_isolated(VertexId v) const {
  if (!has_vertex(v)) fail(ErrorKind::UnknownVertex, id_str(v));
  if (in_clique(v) && clique_.size() > 1) return false;
  return cross_neighbors(v).empty();
}

SplitGraph SplitGraph::normalized() const {
  SplitGraph g = *this;
  bool moved = true;
  while (moved && !g.clique_.empty()) {
    moved = false;
    for (VertexId i : g.independent_) {
      if (g.cross_neighbors(i) != g.clique_) continue;
      // i is adjacent to all of K, so its cross edges become implied.
      std::vector<VertexId> k_ids(g.clique_.begin(), g.clique_.end());
      k_ids.push_back(i);
      std::vector<VertexId> i_ids;
      for (VertexId w : g.independent_) {
        if (w != i) i_ids.push_back(w);
      }
      std::vector<std::pair<VertexId, VertexId>> edges;
      for (auto [k, w] : g.cross_edges_) {
        if (w != i) edges.emplace_back(k, w);
      }
      g = validate(k_ids, i_ids, edges);
      moved = true;
      break;
    }
  }
  return g;
}

std::vector<std::pair<VertexId, VertexId>> SplitGraph::implied_edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  const auto& k = clique_.ids();
  for (std::size_t a = 0; a < k.size(); ++a) {
    for (std::size_t b = a + 1; b < k.size(); ++b) out.emplace_back(k[a], k[b]);
  }
  for (auto [u, v] : cross_edges_) {
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace antikit
