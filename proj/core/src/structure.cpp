#include "antikit/structure.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "antikit/errors.hpp"

namespace antikit {

const char* to_string(PathClass c) {
  switch (c) {
    case PathClass::P1: return "P1";
    case PathClass::P2: return "P2";
    case PathClass::P3: return "P3";
  }
  return "?";
}

const char* to_string(CircuitClass c) {
  switch (c) {
    case CircuitClass::C1: return "C1";
    case CircuitClass::C2: return "C2";
    case CircuitClass::C3: return "C3";
  }
  return "?";
}

const char* to_string(Recognition::Verdict v) {
  switch (v) {
    case Recognition::Verdict::Recognized: return "recognized";
    case Recognition::Verdict::FullPowerSet: return "full power set";
    case Recognition::Verdict::NotAntimatroid: return "not an antimatroid";
    case Recognition::Verdict::NotSplit: return "candidate graph is not split";
    case Recognition::Verdict::FamilyMismatch: return "family mismatch";
  }
  return "?";
}

std::vector<AntimatroidPath> path_poset(const SplitGraph& g) {
  if (!g.clique().empty()) {
    for (VertexId i : g.independent()) {
      if (g.cross_neighbors(i) == g.clique()) {
        fail(ErrorKind::NormalizationRequired,
             "vertex " + std::to_string(i) + " in I is adjacent to all of K; normalize first");
      }
    }
  }

  std::vector<AntimatroidPath> result;
  auto emit = [&result](VertexSet members, PathClass cls, std::optional<VertexId> k,
                        std::optional<VertexId> i) {
    for (const AntimatroidPath& p : result) {
      if (p.members == members) return;  // keep the lowest class
    }
    result.push_back({std::move(members), cls, k, i});
  };

  for (VertexId i : g.independent()) {
    emit(VertexSet{i}, PathClass::P1, std::nullopt, std::nullopt);
  }
  for (VertexId k : g.clique()) {
    emit(g.cross_neighbors(k).with(k), PathClass::P2, k, std::nullopt);
  }
  for (VertexId i : g.independent()) {
    VertexSet base = fos(g, i);
    for (VertexId k : g.cross_neighbors(i)) {
      VertexSet members = base.unite(g.cross_neighbors(k).without(i)).with(k);
      emit(std::move(members), PathClass::P3, k, i);
    }
  }

  std::stable_sort(result.begin(), result.end(),
                   [](const AntimatroidPath& a, const AntimatroidPath& b) {
                     if (a.path_class != b.path_class) return a.path_class < b.path_class;
                     return family_less(a.members, b.members);
                   });
  return result;
}

std::vector<RootedCircuit> rooted_circuits(const SplitGraph& g) {
  using Key = std::pair<VertexId, VertexSet>;
  auto key_less = [](const Key& a, const Key& b) {
    if (a.first != b.first) return a.first < b.first;
    return family_less(a.second, b.second);
  };
  std::map<Key, RootedCircuit, decltype(key_less)> seen(key_less);
  auto emit = [&seen](VertexSet support, VertexId root, CircuitClass cls) {
    Key key{root, support};
    if (seen.count(key)) return;  // classes scanned in order, lowest wins
    bool critical = cls == CircuitClass::C1 || cls == CircuitClass::C2;
    seen.emplace(std::move(key), RootedCircuit{std::move(support), root, cls, critical});
  };

  for (VertexId k : g.clique()) {
    const VertexSet& ni = g.cross_neighbors(k);
    const auto& ni_ids = ni.ids();
    for (std::size_t a = 0; a < ni_ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ni_ids.size(); ++b) {
        emit(VertexSet{ni_ids[a], ni_ids[b]}, k, CircuitClass::C1);
      }
    }
  }
  for (VertexId k : g.clique()) {
    for (VertexId i : g.cross_neighbors(k)) {
      for (VertexId l : g.clique()) {
        if (l == k || g.adjacent(l, i)) continue;
        emit(VertexSet{i, l}, k, CircuitClass::C2);
      }
    }
  }
  for (VertexId k : g.clique()) {
    for (VertexId i : g.cross_neighbors(k)) {
      for (VertexId j : g.independent()) {
        if (j == i || g.adjacent(j, k)) continue;
        bool separated = false;
        for (VertexId m : g.cross_neighbors(j)) {
          if (!g.adjacent(m, i)) {
            separated = true;
            break;
          }
        }
        if (separated) emit(VertexSet{i, j}, k, CircuitClass::C3);
      }
    }
  }

  std::vector<RootedCircuit> result;
  result.reserve(seen.size());
  for (auto& [key, circuit] : seen) {
    (void)key;
    result.push_back(std::move(circuit));
  }
  std::sort(result.begin(), result.end(), [](const RootedCircuit& a, const RootedCircuit& b) {
    if (a.root != b.root) return a.root < b.root;
    return family_less(a.support, b.support);
  });
  return result;
}

bool is_free(const SplitGraph& g, const VertexSet& x) {
  if (!x.subset_of(g.vertices())) {
    fail(ErrorKind::UnknownVertex, "set contains ids outside the graph");
  }
  VertexSet l = x.intersect(g.clique());
  VertexSet j = x.intersect(g.independent());

  bool edge_between = false;
  for (VertexId h : j) {
    if (!g.cross_neighbors(h).intersect(l).empty()) {
      edge_between = true;
      break;
    }
  }
  if (!edge_between) return true;

  for (VertexId h : j) {
    const VertexSet& nh = g.cross_neighbors(h);
    if (!l.subset_of(nh)) continue;
    if (g.neighbors(j.without(h)).subset_of(nh.difference(l))) return true;
  }
  return false;
}

SetFamily trace(const SetFamily& family, const VertexSet& x) {
  if (!x.subset_of(family.ground())) {
    fail(ErrorKind::UnknownVertex, "set contains ids outside the family ground");
  }
  std::vector<VertexSet> pieces;
  pieces.reserve(family.size());
  for (const VertexSet& f : family.sets()) pieces.push_back(f.intersect(x));
  return SetFamily(x, std::move(pieces));
}

namespace {

bool is_full_power_set(const SetFamily& family) {
  std::size_t n = family.ground().size();
  if (n > 62) return false;  // a stored family of that size is out of reach
  return family.size() == (std::size_t{1} << n);
}

struct CandidateGraph {
  VertexSet isolated;
  std::vector<std::pair<VertexId, VertexId>> edges;  // (min, max), sorted
};

// Vertices v with {v} feasible and every pair-removal V\{v,u} feasible are
// exactly the isolated ones (given the family is not the full power set);
// among the rest, edges are the pairs whose co-pair stays feasible.
CandidateGraph candidate_from_family(const SetFamily& family) {
  const VertexSet& ground = family.ground();
  CandidateGraph out;

  std::vector<VertexId> isolated;
  for (VertexId v : ground) {
    if (!family.contains(VertexSet{v})) continue;
    bool all_pairs = true;
    for (VertexId u : ground) {
      if (u == v) continue;
      if (!family.contains(ground.difference(VertexSet{u, v}))) {
        all_pairs = false;
        break;
      }
    }
    if (all_pairs) isolated.push_back(v);
  }
  out.isolated = VertexSet(std::move(isolated));

  const auto& ids = ground.ids();
  for (std::size_t a = 0; a < ids.size(); ++a) {
    if (out.isolated.contains(ids[a])) continue;
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      if (out.isolated.contains(ids[b])) continue;
      if (family.contains(ground.difference(VertexSet{ids[a], ids[b]}))) {
        out.edges.emplace_back(ids[a], ids[b]);
      }
    }
  }
  return out;
}

// Degree-sequence split partition: sort by degree (descending, ids break
// ties), take the largest m with d_m >= m-1 as the clique. For a split edge
// set this always yields a legal partition; the caller validates.
struct SplitPartition {
  bool ok = false;
  std::vector<VertexId> clique;
  std::vector<VertexId> independent;
  std::string why;
};

SplitPartition split_partition(const VertexSet& vertices,
                               const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::map<VertexId, int> degree;
  for (VertexId v : vertices) degree[v] = 0;
  for (auto [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<VertexId> order(vertices.begin(), vertices.end());
  std::sort(order.begin(), order.end(), [&degree](VertexId a, VertexId b) {
    if (degree.at(a) != degree.at(b)) return degree.at(a) > degree.at(b);
    return a < b;
  });

  std::size_t m = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (degree.at(order[i]) >= static_cast<int>(i)) m = i + 1;
  }

  SplitPartition part;
  part.clique.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
  part.independent.assign(order.begin() + static_cast<std::ptrdiff_t>(m), order.end());

  auto has_edge = [&edges](VertexId a, VertexId b) {
    auto e = std::minmax(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(e.first, e.second));
  };
  for (std::size_t a = 0; a < part.clique.size(); ++a) {
    for (std::size_t b = a + 1; b < part.clique.size(); ++b) {
      if (!has_edge(part.clique[a], part.clique[b])) {
        part.why = "vertices " + std::to_string(part.clique[a]) + " and " +
                   std::to_string(part.clique[b]) + " cannot both join a clique side";
        return part;
      }
    }
  }
  for (std::size_t a = 0; a < part.independent.size(); ++a) {
    for (std::size_t b = a + 1; b < part.independent.size(); ++b) {
      if (has_edge(part.independent[a], part.independent[b])) {
        part.why = "edge " + std::to_string(part.independent[a]) + "-" +
                   std::to_string(part.independent[b]) + " lands inside the independent side";
        return part;
      }
    }
  }
  part.ok = true;
  return part;
}

SplitGraph assemble(const SplitPartition& part,
                    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  VertexSet clique((std::vector<VertexId>(part.clique)));
  std::vector<std::pair<VertexId, VertexId>> cross;
  for (auto [a, b] : edges) {
    bool a_k = clique.contains(a);
    bool b_k = clique.contains(b);
    if (a_k && b_k) continue;  // implied
    cross.emplace_back(a, b);
  }
  return SplitGraph::validate(part.clique, part.independent, cross).normalized();
}

SplitGraph edgeless_graph(const VertexSet& ground) {
  return SplitGraph::validate({}, std::vector<VertexId>(ground.begin(), ground.end()), {});
}

}  // namespace

SplitGraph reconstruct_graph(const SetFamily& family, bool force_canonical) {
  AxiomCheck check = verify_antimatroid(family);
  if (!check.ok) {
    fail(ErrorKind::NotAnAntimatroid, "family violates the antimatroid axioms");
  }
  if (is_full_power_set(family)) {
    if (force_canonical) return edgeless_graph(family.ground());
    fail(ErrorKind::FullPowerSet,
         "several split graphs induce the full power set; pass the canonical flag to pick "
         "the edgeless one");
  }

  CandidateGraph candidate = candidate_from_family(family);
  SplitPartition part = split_partition(family.ground(), candidate.edges);
  if (!part.ok) fail(ErrorKind::NotSplitShelling, part.why);
  return assemble(part, candidate.edges);
}

Recognition recognize(const SetFamily& family, bool force_canonical,
                      const BruteForceLimits& limits) {
  Recognition result;

  AxiomCheck check = verify_antimatroid(family);
  if (!check.ok) {
    result.verdict = Recognition::Verdict::NotAntimatroid;
    switch (*check.violated) {
      case AxiomCheck::Axiom::GroundMembership:
        result.detail = "the ground set itself is not a member";
        break;
      case AxiomCheck::Axiom::UnionClosure:
        result.detail = "a union of two members escapes the family";
        break;
      case AxiomCheck::Axiom::Accessibility:
        result.detail = "a nonempty member has no removable element";
        break;
    }
    result.witnesses = check.witnesses;
    return result;
  }

  if (is_full_power_set(family)) {
    if (force_canonical) {
      result.verdict = Recognition::Verdict::Recognized;
      result.graph = edgeless_graph(family.ground());
      result.detail = "full power set; canonical edgeless graph chosen";
      return result;
    }
    result.verdict = Recognition::Verdict::FullPowerSet;
    result.detail = "several split graphs induce the full power set";
    return result;
  }

  CandidateGraph candidate = candidate_from_family(family);
  SplitPartition part = split_partition(family.ground(), candidate.edges);
  if (!part.ok) {
    result.verdict = Recognition::Verdict::NotSplit;
    result.detail = part.why;
    return result;
  }

  SplitGraph graph = assemble(part, candidate.edges);
  SetFamily produced = enumerate_feasible(graph, limits);
  if (produced != family) {
    result.verdict = Recognition::Verdict::FamilyMismatch;
    for (const VertexSet& s : produced.sets()) {
      if (!family.contains(s)) {
        result.witnesses.push_back(s);
        result.detail = "candidate graph makes this set feasible but the family lacks it";
        break;
      }
    }
    if (result.witnesses.empty()) {
      for (const VertexSet& s : family.sets()) {
        if (!produced.contains(s)) {
          result.witnesses.push_back(s);
          result.detail = "family member is not feasible for the candidate graph";
          break;
        }
      }
    }
    return result;
  }

  result.verdict = Recognition::Verdict::Recognized;
  result.graph = std::move(graph);
  return result;
}

}  // namespace antikit
