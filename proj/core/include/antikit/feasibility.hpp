#pragma once

#include <optional>
#include <vector>

#include "antikit/set_family.hpp"
#include "antikit/simple_graph.hpp"
#include "antikit/split_graph.hpp"

namespace antikit {

/// Guards for the exponential helpers. Exceeding a bound raises
/// GroundSetTooLarge instead of silently truncating.
struct BruteForceLimits {
  int subset_enumeration_max = 20;  // 2^|V| subset scans
  int chordless_path_max = 16;      // induced-path searches

  /// ANTIKIT_BRUTE_LIMIT, when set, overrides both bounds.
  static BruteForceLimits from_env();
};

/// An ordering of a feasible set in which each element is simplicial in the
/// graph with the preceding elements deleted.
struct Shelling {
  std::vector<VertexId> order;
  bool operator==(const Shelling&) const = default;
};

/// Every feasible set has N(F) either inside K ("star") or meeting I in
/// exactly one vertex i ("i-feasible").
class FeasibleClass {
 public:
  static FeasibleClass star() { return FeasibleClass{}; }
  static FeasibleClass i_feasible(VertexId i) {
    FeasibleClass c;
    c.witness_ = i;
    return c;
  }

  bool is_star() const { return !witness_.has_value(); }
  std::optional<VertexId> witness() const { return witness_; }

  bool operator==(const FeasibleClass&) const = default;

 private:
  std::optional<VertexId> witness_;
};

/// True iff N(f) induces a clique.
bool is_feasible(const SplitGraph& g, const VertexSet& f);

/// Simplicial shelling of a feasible set: the members of f in I first, then
/// the members of K not adjacent to I\f, then the rest of f's K part, each
/// block in increasing id order. Throws NotFeasible otherwise.
Shelling shelling(const SplitGraph& g, const VertexSet& f);

/// Direct check of the shelling condition: every element simplicial once the
/// preceding ones are deleted. Independent of the clique characterization.
bool is_simplicial_shelling(const SplitGraph& g, const std::vector<VertexId>& order);

/// fos(i): the vertices contained in every i-feasible set, namely the K
/// vertices not adjacent to i plus the I vertices whose neighborhood is not
/// contained in N(i). Requires i in I.
VertexSet fos(const SplitGraph& g, VertexId i);

/// ufs(i): complement of fos(i) minus i itself.
VertexSet ufs(const SplitGraph& g, VertexId i);

FeasibleClass classify(const SplitGraph& g, const VertexSet& f);

/// All feasible sets, canonically ordered. Always contains the empty set and
/// the full vertex set.
SetFamily enumerate_feasible(const SplitGraph& g, const BruteForceLimits& limits = {});

struct AxiomCheck {
  enum class Axiom {
    GroundMembership,  // the ground set itself must be feasible
    UnionClosure,      // unions of feasible sets stay feasible
    Accessibility,     // every nonempty feasible set has a removable element
  };

  bool ok = true;
  std::optional<Axiom> violated;
  std::vector<VertexSet> witnesses;

  explicit operator bool() const { return ok; }
};

/// Checks the antimatroid axioms in the fixed order ground membership, union
/// closure, accessibility, and reports the first violation with a witness.
AxiomCheck verify_antimatroid(const SetFamily& family);

/// True iff every chordless path joining two members of c stays inside c.
bool is_m_convex(const SplitGraph& g, const VertexSet& c, const BruteForceLimits& limits = {});
bool is_m_convex(const SimpleGraph& g, const VertexSet& c, const BruteForceLimits& limits = {});

}  // namespace antikit
