#include "antikit/hardness.hpp"

#include <algorithm>
#include <set>

#include "antikit/errors.hpp"

namespace antikit::hardness {

SourceGraph SourceGraph::validate(std::vector<std::string> vertices,
                                  std::vector<std::pair<std::string, std::string>> edges) {
  SourceGraph g;
  std::sort(vertices.begin(), vertices.end());
  auto dup = std::adjacent_find(vertices.begin(), vertices.end());
  if (dup != vertices.end()) {
    fail(ErrorKind::OverlappingPartition, "vertex '" + *dup + "' listed twice");
  }
  g.vertices_ = std::move(vertices);

  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    auto ia = g.vertex_index(a);
    auto ib = g.vertex_index(b);
    if (!ia) fail(ErrorKind::UnknownElement, "vertex '" + a + "' in edge " + a + "-" + b);
    if (!ib) fail(ErrorKind::UnknownElement, "vertex '" + b + "' in edge " + a + "-" + b);
    if (*ia == *ib) fail(ErrorKind::IllegalEdge, "loop at '" + a + "'");
    auto canonical = std::minmax(*ia, *ib);
    if (!seen.insert({canonical.first, canonical.second}).second) {
      fail(ErrorKind::DuplicateEdge, a + "-" + b);
    }
  }
  g.edges_.assign(seen.begin(), seen.end());

  g.degree_.assign(g.vertices_.size(), 0);
  for (auto [a, b] : g.edges_) {
    ++g.degree_[static_cast<std::size_t>(a)];
    ++g.degree_[static_cast<std::size_t>(b)];
  }
  return g;
}

bool SourceGraph::adjacent(int u, int v) const {
  auto e = std::minmax(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(e.first, e.second));
}

std::optional<int> SourceGraph::vertex_index(const std::string& name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

ReductionInstance ReductionInstance::build(SourceGraph graph, const Rational& delta) {
  if (delta <= Rational(0) || delta >= Rational(1)) {
    fail(ErrorKind::InvalidDelta, "delta must lie strictly between 0 and 1");
  }
  ReductionInstance inst;
  inst.graph_ = std::move(graph);
  inst.delta_ = delta;
  return inst;
}

bool ReductionInstance::is_vertex_element(ElementId e) const {
  return e >= 0 && e < graph_.vertex_count();
}

bool ReductionInstance::is_edge_element(ElementId e) const {
  return e >= graph_.vertex_count() && e < element_count();
}

std::pair<ElementId, ElementId> ReductionInstance::edge_endpoints(ElementId e) const {
  if (!is_edge_element(e)) fail(ErrorKind::UnknownElement, std::to_string(e));
  return graph_.edges()[static_cast<std::size_t>(e - graph_.vertex_count())];
}

Rational ReductionInstance::weight(ElementId e) const {
  if (is_vertex_element(e)) return Rational(-graph_.degree(e)) + delta_;
  if (is_edge_element(e)) return Rational(1);
  fail(ErrorKind::UnknownElement, std::to_string(e));
}

Rational ReductionInstance::weight_sum(const ElementSet& f) const {
  Rational total(0);
  for (ElementId e : f) total += weight(e);
  return total;
}

std::string ReductionInstance::element_name(ElementId e) const {
  if (is_vertex_element(e)) return graph_.vertices()[static_cast<std::size_t>(e)];
  auto [a, b] = edge_endpoints(e);
  return graph_.vertices()[static_cast<std::size_t>(a)] + "-" +
         graph_.vertices()[static_cast<std::size_t>(b)];
}

std::optional<ElementId> ReductionInstance::element_by_name(const std::string& name) const {
  if (auto v = graph_.vertex_index(name)) return *v;
  auto dash = name.find('-');
  if (dash == std::string::npos) return std::nullopt;
  auto a = graph_.vertex_index(name.substr(0, dash));
  auto b = graph_.vertex_index(name.substr(dash + 1));
  if (!a || !b) return std::nullopt;
  auto canonical = std::minmax(*a, *b);
  const auto& edges = graph_.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(),
                             std::make_pair(canonical.first, canonical.second));
  if (it == edges.end() || *it != std::make_pair(canonical.first, canonical.second)) {
    return std::nullopt;
  }
  return graph_.vertex_count() + static_cast<int>(it - edges.begin());
}

ElementSet ReductionInstance::ground() const {
  std::vector<ElementId> ids(static_cast<std::size_t>(element_count()));
  for (int e = 0; e < element_count(); ++e) ids[static_cast<std::size_t>(e)] = e;
  return ElementSet(std::move(ids));
}

bool is_feasible(const ReductionInstance& inst, const ElementSet& f) {
  for (ElementId e : f) {
    if (e < 0 || e >= inst.element_count()) fail(ErrorKind::UnknownElement, std::to_string(e));
  }
  for (ElementId e : f) {
    if (!inst.is_edge_element(e)) continue;
    auto [a, b] = inst.edge_endpoints(e);
    if (!f.contains(a) && !f.contains(b)) return false;
  }
  return true;
}

Extraction extract_independent_set(const ReductionInstance& inst, const ElementSet& f) {
  if (!is_feasible(inst, f)) {
    fail(ErrorKind::NotFeasible, "extraction starts from a feasible set");
  }

  ElementSet current = f;
  while (true) {
    // Lexicographically smallest adjacent in-set pair (u, v); vertex element
    // ids follow name order, so id order is name order.
    std::optional<std::pair<ElementId, ElementId>> pick;
    const auto& ids = current.ids();
    for (std::size_t a = 0; a < ids.size() && !pick; ++a) {
      if (!inst.is_vertex_element(ids[a])) break;
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        if (!inst.is_vertex_element(ids[b])) break;
        if (inst.graph().adjacent(ids[a], ids[b])) {
          pick = {ids[a], ids[b]};
          break;
        }
      }
    }
    if (!pick) break;

    current = current.without(pick->first);
    // Drop edge elements this removal left uncovered.
    std::vector<ElementId> kept;
    for (ElementId e : current) {
      if (inst.is_edge_element(e)) {
        auto [a, b] = inst.edge_endpoints(e);
        if (!current.contains(a) && !current.contains(b)) continue;
      }
      kept.push_back(e);
    }
    current = ElementSet(std::move(kept));
  }

  Extraction out;
  out.feasible_subset = current;
  std::vector<ElementId> verts;
  for (ElementId e : current) {
    if (inst.is_vertex_element(e)) verts.push_back(e);
  }
  out.independent_vertices = ElementSet(std::move(verts));
  return out;
}

std::vector<ElementSet> path_poset(const ReductionInstance& inst) {
  std::vector<ElementSet> out;
  int nv = inst.graph().vertex_count();
  for (int v = 0; v < nv; ++v) out.push_back(ElementSet{v});
  for (int e = 0; e < inst.graph().edge_count(); ++e) {
    auto [a, b] = inst.graph().edges()[static_cast<std::size_t>(e)];
    out.push_back(ElementSet{a, nv + e});
    out.push_back(ElementSet{b, nv + e});
  }
  std::sort(out.begin(), out.end(), family_less);
  return out;
}

}  // namespace antikit::hardness
