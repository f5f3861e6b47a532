#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antikit/feasibility.hpp"
#include "antikit/set_family.hpp"
#include "antikit/split_graph.hpp"

namespace antikit {

enum class PathClass { P1, P2, P3 };

/// A feasible set that is not the union of two proper nonempty feasible
/// sets. P1 holds the I singletons, P2 the sets {k} + N(k) within I, P3 the
/// sets fos(i) + {k} + (N(k) within I minus i) for cross pairs (i, k).
struct AntimatroidPath {
  VertexSet members;
  PathClass path_class;
  std::optional<VertexId> clique_anchor;       // the k of P2 and P3
  std::optional<VertexId> independent_anchor;  // the i of P3

  bool operator==(const AntimatroidPath&) const = default;
};

/// Requires g already normalized (no i in I with N(i) = K), else throws
/// NormalizationRequired. Duplicate sets across classes are emitted once
/// with the lowest class. Sorted by (class, size, lexicographic).
std::vector<AntimatroidPath> path_poset(const SplitGraph& g);

enum class CircuitClass { C1, C2, C3 };

/// Minimal non-free set given as (support, root): the trace of the feasible
/// family on support + root is every subset except {root}. On split graphs
/// every circuit has three elements and its root lies in K.
struct RootedCircuit {
  VertexSet support;  // two vertices
  VertexId root;
  CircuitClass circuit_class;
  bool critical;  // class C1 or C2

  bool operator==(const RootedCircuit&) const = default;
};

/// All rooted circuits, sorted by (root, support). C1: two I-neighbors of a
/// clique vertex. C2: an I-neighbor of k plus a clique vertex missing from
/// its neighborhood. C3: an I-neighbor of k plus a non-neighbor j in I that
/// some other clique vertex separates. C1 and C2 are the critical ones.
std::vector<RootedCircuit> rooted_circuits(const SplitGraph& g);

/// With L = x in K and J = x in I: free iff no L-J edge exists, or some h in
/// J has L inside N(h) and N(J minus h) inside N(h) minus L.
bool is_free(const SplitGraph& g, const VertexSet& x);

/// tr(family, x) = { F intersect x : F in family }, deduplicated.
SetFamily trace(const SetFamily& family, const VertexSet& x);

/// Rebuilds the unique split graph from its feasible family: isolated
/// vertices are those v with every co-pair feasible and {v} feasible; edges
/// join non-isolated pairs whose complement pair-removal stays feasible. The
/// clique/independent partition is recovered from the degree sequence,
/// validated, and normalized. Throws NotAnAntimatroid, FullPowerSet (unless
/// force_canonical, which yields the edgeless graph), or NotSplitShelling
/// when no split partition exists.
SplitGraph reconstruct_graph(const SetFamily& family, bool force_canonical = false);

/// Decision result of recognize(); refusals are values, not errors.
struct Recognition {
  enum class Verdict {
    Recognized,
    FullPowerSet,    // ambiguous: several split graphs produce 2^V
    NotAntimatroid,  // axiom violation, witnesses attached
    NotSplit,        // candidate edge set admits no split partition
    FamilyMismatch,  // candidate graph generates a different family
  };

  Verdict verdict = Verdict::Recognized;
  std::optional<SplitGraph> graph;
  std::string detail;
  std::vector<VertexSet> witnesses;

  bool ok() const { return verdict == Verdict::Recognized; }
};

/// Tests whether the family is the feasible family of some split graph and
/// returns that graph, or a refusal naming a witness. Accepts 2^V only under
/// force_canonical (returning the edgeless graph).
Recognition recognize(const SetFamily& family, bool force_canonical = false,
                      const BruteForceLimits& limits = {});

const char* to_string(PathClass c);
const char* to_string(CircuitClass c);
const char* to_string(Recognition::Verdict v);

}  // namespace antikit
