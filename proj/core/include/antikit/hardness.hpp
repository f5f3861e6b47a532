#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antikit/rational.hpp"
#include "antikit/set_family.hpp"
#include "antikit/vertex_set.hpp"

namespace antikit::hardness {

/// Arbitrary simple graph with named vertices; the input of the reduction.
class SourceGraph {
 public:
  SourceGraph() = default;  // empty graph

  static SourceGraph validate(std::vector<std::string> vertices,
                              std::vector<std::pair<std::string, std::string>> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  /// Edges as index pairs (a < b) into vertices(), sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const;
  std::optional<int> vertex_index(const std::string& name) const;

 private:
  std::vector<std::string> vertices_;  // sorted unique names
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> degree_;
};

/// Ground elements of the reduction, indexed densely: element ids
/// 0..n-1 are the graph vertices, n..n+m-1 the graph edges. Element sets and
/// families reuse VertexSet/SetFamily over these ids.
using ElementId = VertexId;
using ElementSet = VertexSet;

/// Weighted edge-cover antimatroid of a graph: a set of elements is feasible
/// iff every edge element in it has an endpoint vertex element in it.
/// Vertex elements weigh -degree + delta, edge elements weigh 1.
class ReductionInstance {
 public:
  /// Requires delta strictly between 0 and 1 (InvalidDelta otherwise).
  static ReductionInstance build(SourceGraph graph, const Rational& delta = Rational(1, 10));

  const SourceGraph& graph() const { return graph_; }
  const Rational& delta() const { return delta_; }

  int element_count() const { return graph_.vertex_count() + graph_.edge_count(); }
  bool is_vertex_element(ElementId e) const;
  bool is_edge_element(ElementId e) const;
  /// For an edge element, its two endpoints as vertex-element ids.
  std::pair<ElementId, ElementId> edge_endpoints(ElementId e) const;

  Rational weight(ElementId e) const;
  Rational weight_sum(const ElementSet& f) const;

  std::string element_name(ElementId e) const;  // "a" or "a-b"
  std::optional<ElementId> element_by_name(const std::string& name) const;

  ElementSet ground() const;

 private:
  ReductionInstance() = default;

  SourceGraph graph_;
  Rational delta_;
};

/// Edge-cover feasibility rule. Throws UnknownElement for out-of-range ids.
bool is_feasible(const ReductionInstance& inst, const ElementSet& f);

struct Extraction {
  ElementSet feasible_subset;       // F', still feasible
  ElementSet independent_vertices;  // the vertex elements of F'
};

/// Repeatedly removes the lexicographically smallest adjacent in-set vertex
/// pair's first endpoint (plus any edge element this uncovers) until the
/// remaining vertex elements are independent in the source graph. The result
/// satisfies delta * |independent| >= weight(f).
Extraction extract_independent_set(const ReductionInstance& inst, const ElementSet& f);

/// The indecomposable feasible sets of the reduction: {v} for every vertex
/// and {v, e} for every incidence, |V| + 2|E| sets in canonical order.
std::vector<ElementSet> path_poset(const ReductionInstance& inst);

}  // namespace antikit::hardness
