// Acceptance suite: runs every top-level requirement and prints one PASS or
// FAIL line per criterion. Exit code 0 only when everything passes.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace antikit;
using namespace testkit;

namespace {

struct Failure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criterion 1 -----------------------------------------------------------

void worked_example_lattice() {
  auto start = std::chrono::steady_clock::now();
  SplitGraph g = example_graph();
  SetFamily fam = enumerate_feasible(g);
  require(fam.size() == 29, "expected 29 feasible sets, got " + std::to_string(fam.size()));

  int star = 0;
  int i4 = 0, i5 = 0, i6 = 0;
  for (const VertexSet& f : fam.sets()) {
    FeasibleClass c = classify(g, f);
    if (c.is_star()) ++star;
    else if (*c.witness() == 4) ++i4;
    else if (*c.witness() == 5) ++i5;
    else if (*c.witness() == 6) ++i6;
  }
  require(star == 21 && i4 == 1 && i5 == 4 && i6 == 3,
          "class partition mismatch: star=" + std::to_string(star) + " i4=" + std::to_string(i4) +
              " i5=" + std::to_string(i5) + " i6=" + std::to_string(i6));
  require(seconds_since(start) < 1.0, "enumeration exceeded 1 s");
}

// --- criterion 2 -----------------------------------------------------------

void fos_fixtures() {
  SplitGraph g = example_graph();
  require(fos(g, 5) == VertexSet{3, 6}, "fos(5) wrong");
  require(fos(g, 6) == VertexSet{1, 4, 5}, "fos(6) wrong");
  require(fos(g, 4) == VertexSet{2, 3, 5, 6}, "fos(4) wrong");
  require(fos(forced_set_figure_graph(), 5) == VertexSet{2, 4}, "figure fos(i2) wrong");
}

// --- criterion 3 -----------------------------------------------------------

void path_poset_criterion() {
  std::vector<VertexSet> expected = {
      VertexSet{4},          VertexSet{5},          VertexSet{6},
      VertexSet{1, 4, 5},    VertexSet{2, 5, 6},    VertexSet{3, 6},
      VertexSet{1, 2, 4, 5}, VertexSet{1, 3, 4, 5}, VertexSet{2, 3, 6},
      VertexSet{1, 3, 4, 6}, VertexSet{1, 2, 3, 5, 6}};
  std::sort(expected.begin(), expected.end(), family_less);
  std::vector<VertexSet> got;
  for (const AntimatroidPath& p : path_poset(example_graph())) got.push_back(p.members);
  std::sort(got.begin(), got.end(), family_less);
  require(got == expected, "example path poset differs from the figure");

  std::mt19937 rng(30001);
  for (int t = 0; t < 200; ++t) {
    SplitGraph g = random_split_graph(rng, 1, 14).normalized();
    std::size_t n = path_poset(g).size();
    require(n == g.vertex_count() + g.cross_edges().size(),
            "path count != vertices + cross edges");
  }
}

// --- criterion 4 -----------------------------------------------------------

void decomposition_criterion() {
  std::mt19937 rng(40001);
  for (int t = 0; t < 200; ++t) {
    SplitGraph g = random_split_graph(rng, 1, 12);
    SetFamily fam = enumerate_feasible(g);
    Poset prec = build_prec(g);

    std::vector<VertexSet> star;
    for (const VertexSet& f : fam.sets()) {
      if (classify(g, f).is_star()) star.push_back(f);
    }
    require(prec.enumerate_filters() == SetFamily(g.vertices(), std::move(star)),
            "filters != star family");

    for (VertexId i : g.independent()) {
      std::vector<VertexSet> expected;
      for (const VertexSet& f : fam.sets()) {
        FeasibleClass c = classify(g, f);
        if (!c.is_star() && *c.witness() == i) expected.push_back(f);
      }
      std::vector<VertexSet> constructed;
      VertexSet base = fos(g, i);
      SetFamily sub_filters = prec.restrict(ufs(g, i)).enumerate_filters();
      for (const VertexSet& h : sub_filters.sets()) {
        if (!h.intersect(g.clique()).empty()) constructed.push_back(base.unite(h));
      }
      require(SetFamily(g.vertices(), std::move(constructed)) ==
                  SetFamily(g.vertices(), std::move(expected)),
              "fos(i) + filter construction != i-feasible family");
    }
  }
}

// --- criterion 5 -----------------------------------------------------------

// Subset scan with an O(1) feasibility and weight check per leaf.
struct BruteScan {
  VertexSet best_set;
  long long best_weight = 0;
  bool found = false;
};

BruteScan brute_optimum(const SplitGraph& g, const std::vector<long long>& w,
                        const detail::DenseIndex& index, bool minimize) {
  int n = index.size();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    adj[static_cast<std::size_t>(p)] = index.mask_of(g.neighbors(VertexSet{index.id(p)}));
  }
  std::uint64_t k_mask = index.mask_of(g.clique());
  std::uint64_t i_mask = index.mask_of(g.independent());

  BruteScan best;
  std::uint64_t best_mask = 0;
  struct Frame {
    int depth;
    std::uint64_t members;
    std::uint64_t nbrs;
    long long weight;
  };
  std::vector<Frame> stack{{0, 0, 0, 0}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (fr.depth < n) {
      stack.push_back({fr.depth + 1, fr.members, fr.nbrs, fr.weight});
      std::uint64_t bit = std::uint64_t{1} << fr.depth;
      stack.push_back({fr.depth + 1, fr.members | bit,
                       fr.nbrs | adj[static_cast<std::size_t>(fr.depth)],
                       fr.weight + w[static_cast<std::size_t>(fr.depth)]});
      continue;
    }
    std::uint64_t outside = fr.nbrs & ~fr.members;
    std::uint64_t out_i = outside & i_mask;
    bool feasible = out_i == 0;
    if (!feasible && std::popcount(out_i) == 1) {
      int i = std::countr_zero(out_i);
      feasible = (outside & k_mask & ~adj[static_cast<std::size_t>(i)]) == 0;
    }
    if (!feasible) continue;
    long long keyed = minimize ? -fr.weight : fr.weight;
    long long best_keyed = minimize ? -best.best_weight : best.best_weight;
    if (!best.found || keyed > best_keyed ||
        (keyed == best_keyed && detail::mask_family_less(fr.members, best_mask))) {
      best.found = true;
      best.best_weight = fr.weight;
      best_mask = fr.members;
    }
  }
  best.best_set = index.set_of(best_mask);
  return best;
}

void optimizer_criterion() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(50001);
  for (int t = 0; t < 500; ++t) {
    SplitGraph g = random_split_graph(rng, 1, 14);
    detail::DenseIndex index(g.vertices());
    std::vector<long long> raw(static_cast<std::size_t>(index.size()));
    WeightFn w;
    for (int p = 0; p < index.size(); ++p) {
      long long value = static_cast<long long>(rng_below(rng, 19)) - 9;
      raw[static_cast<std::size_t>(p)] = value;
      w.set(index.id(p), Rational(value));
    }
    bool minimize = t % 5 == 0;
    OptResult got = max_weight_feasible(g, w, minimize ? OptSense::Min : OptSense::Max);
    BruteScan expect = brute_optimum(g, raw, index, minimize);
    require(got.best_weight == Rational(expect.best_weight), "optimum weight mismatch");
    require(got.best_set == expect.best_set, "optimum set mismatch under the tie-break");
    require(is_feasible(g, got.best_set), "optimizer returned an infeasible set");
  }
  require(seconds_since(start) < 60.0, "optimizer oracle run exceeded 60 s");
}

// --- criterion 6 -----------------------------------------------------------

void circuits_criterion() {
  std::mt19937 rng(60001);
  for (int t = 0; t < 200; ++t) {
    SplitGraph g = random_split_graph(rng, 1, 10);
    FamilyMasks fm(enumerate_feasible(g));

    auto expected = circuit_oracle(fm);
    std::vector<std::pair<VertexSet, VertexId>> got;
    for (const RootedCircuit& c : rooted_circuits(g)) {
      require(c.critical == (c.circuit_class != CircuitClass::C3),
              "criticality flag does not follow the class rule");
      got.emplace_back(c.support, c.root);
    }
    auto less = [](const std::pair<VertexSet, VertexId>& a,
                   const std::pair<VertexSet, VertexId>& b) {
      if (!(a.first == b.first)) return family_less(a.first, b.first);
      return a.second < b.second;
    };
    std::sort(expected.begin(), expected.end(), less);
    std::sort(got.begin(), got.end(), less);
    require(got == expected, "rooted circuits differ from the trace oracle");

    std::uint64_t full = fm.index.full_mask();
    for (std::uint64_t m = 0;; ++m) {
      require(is_free(g, fm.index.set_of(m)) == free_oracle(fm, m),
              "is_free differs from the trace oracle");
      if (m == full) break;
    }
  }
}

// --- criterion 7 -----------------------------------------------------------

void reconstruction_criterion() {
  std::mt19937 rng(70001);
  int round_trips = 0;
  int mutations = 0;
  while (round_trips < 200) {
    SplitGraph g = random_split_graph(rng, 2, 12);
    SetFamily fam = enumerate_feasible(g);
    if (fam.size() == (std::size_t{1} << g.vertex_count())) continue;

    SplitGraph rebuilt = reconstruct_graph(fam);
    require(rebuilt.implied_edges() == g.implied_edges(), "reconstructed edge set differs");
    VertexSet isolated_in, isolated_out;
    for (VertexId v : g.vertices()) {
      if (g.is_isolated(v)) isolated_in = isolated_in.with(v);
      if (rebuilt.is_isolated(v)) isolated_out = isolated_out.with(v);
    }
    require(isolated_in == isolated_out, "isolated vertices differ");

    Recognition r = recognize(fam);
    require(r.ok(), "recognize refused a genuine family");
    require(enumerate_feasible(*r.graph) == fam, "recognized graph yields a different family");
    ++round_trips;

    if (mutations < 50) {
      Recognition refused;
      switch (mutations % 3) {
        case 0: {  // drop the ground set
          std::vector<VertexSet> rest;
          for (const VertexSet& s : fam.sets()) {
            if (!(s == fam.ground())) rest.push_back(s);
          }
          refused = recognize(SetFamily(fam.ground(), std::move(rest)));
          break;
        }
        case 1: {  // drop a union-reducible member
          std::vector<VertexSet> paths = path_oracle(fam);
          std::optional<VertexSet> victim;
          for (const VertexSet& f : fam.sets()) {
            if (f.empty() || f == fam.ground()) continue;
            if (std::find(paths.begin(), paths.end(), f) == paths.end()) {
              victim = f;
              break;
            }
          }
          if (!victim) continue;
          std::vector<VertexSet> rest;
          for (const VertexSet& s : fam.sets()) {
            if (!(s == *victim)) rest.push_back(s);
          }
          refused = recognize(SetFamily(fam.ground(), std::move(rest)));
          break;
        }
        default: {  // add an inaccessible infeasible set
          FamilyMasks fm(fam);
          std::vector<std::uint8_t> member(std::size_t{1} << fm.index.size(), 0);
          for (std::uint64_t m : fm.masks) member[m] = 1;
          std::optional<VertexSet> added;
          std::uint64_t full = fm.index.full_mask();
          for (std::uint64_t m = 0; m <= full && !added; ++m) {
            if (member[m] || std::popcount(m) < 2) continue;
            bool inaccessible = true;
            for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
              if (member[m & ~(rest & (~rest + 1))]) {
                inaccessible = false;
                break;
              }
            }
            if (inaccessible) added = fm.index.set_of(m);
          }
          if (!added) continue;
          std::vector<VertexSet> sets = fam.sets();
          sets.push_back(*added);
          refused = recognize(SetFamily(fam.ground(), std::move(sets)));
          break;
        }
      }
      require(!refused.ok(), "mutated family was accepted");
      require(!refused.witnesses.empty() || !refused.detail.empty(),
              "refusal carries no witness");
      ++mutations;
    }
  }
  require(mutations == 50, "expected 50 mutated families, got " + std::to_string(mutations));
}

// --- criterion 8 -----------------------------------------------------------

void m_convexity_criterion() {
  std::mt19937 rng(80001);
  for (int t = 0; t < 25; ++t) {
    SplitGraph g = random_split_graph(rng, 1, 10);
    detail::DenseIndex index(g.vertices());
    std::uint64_t full = index.full_mask();
    for (std::uint64_t m = 0;; ++m) {
      VertexSet f = index.set_of(m);
      bool feasible = is_feasible(g, f);
      bool convex = is_m_convex(g, g.vertices().difference(f));
      require(!feasible || convex, "feasible set with non-m-convex complement");
      require(feasible == convex, "split-graph converse failed");
      if (m == full) break;
    }
  }

  SimpleGraph counter = convexity_counterexample_graph();
  VertexSet f{1, 2, 3};
  require(is_m_convex(counter, counterexample_convex_part()),
          "counterexample complement is not m-convex");
  VertexSet nf;
  for (VertexId v : f) nf = nf.unite(counter.neighbors(v));
  nf = nf.difference(f);
  bool clique = true;
  for (VertexId a : nf) {
    for (VertexId b : nf) {
      if (a < b && !counter.adjacent(a, b)) clique = false;
    }
  }
  require(!clique, "counterexample neighborhood unexpectedly a clique");
}

// --- criterion 9 -----------------------------------------------------------

// All labeled graphs on the given vertices with up to max_edges edges.
void for_each_labeled_graph(int n, int max_edges,
                            const std::function<void(const hardness::SourceGraph&)>& fn) {
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j) names.push_back(std::string(1, static_cast<char>('a' + j)));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(names[a], names[b]);
  }
  std::uint32_t count = std::uint32_t{1} << pairs.size();
  for (std::uint32_t pick = 0; pick < count; ++pick) {
    if (std::popcount(pick) > max_edges) continue;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (pick >> e & 1) edges.push_back(pairs[e]);
    }
    fn(hardness::SourceGraph::validate(names, edges));
  }
}

// Exact maximum feasible weight by direct scan over all element subsets.
Rational full_scan_max_weight(const hardness::ReductionInstance& inst) {
  int nv = inst.graph().vertex_count();
  int ne = inst.graph().edge_count();
  int n = nv + ne;
  std::vector<Rational> weights(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) weights[static_cast<std::size_t>(e)] = inst.weight(e);

  Rational best(0);  // the empty set is feasible
  struct Frame {
    int depth;
    std::uint64_t members;
    Rational weight;
  };
  std::vector<Frame> stack{{0, 0, Rational(0)}};
  const auto& edges = inst.graph().edges();
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (fr.depth < n) {
      stack.push_back({fr.depth + 1, fr.members, fr.weight});
      stack.push_back({fr.depth + 1, fr.members | (std::uint64_t{1} << fr.depth),
                       fr.weight + weights[static_cast<std::size_t>(fr.depth)]});
      continue;
    }
    bool ok = true;
    for (int e = 0; e < ne; ++e) {
      if (!(fr.members >> (nv + e) & 1)) continue;
      if (!(fr.members >> edges[static_cast<std::size_t>(e)].first & 1) &&
          !(fr.members >> edges[static_cast<std::size_t>(e)].second & 1)) {
        ok = false;
        break;
      }
    }
    if (ok && fr.weight > best) best = fr.weight;
  }
  return best;
}

// Exact maximum feasible weight scanning vertex subsets only: edge elements
// weigh +1, so the best feasible set over a fixed vertex part S adds every
// edge with an endpoint in S.
Rational vertex_scan_max_weight(const hardness::ReductionInstance& inst) {
  const auto& g = inst.graph();
  int n = g.vertex_count();
  Rational best(0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    Rational w(0);
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) w += Rational(-g.degree(v)) + inst.delta();
    }
    for (auto [a, b] : g.edges()) {
      if ((s >> a & 1) || (s >> b & 1)) w += Rational(1);
    }
    if (w > best) best = w;
  }
  return best;
}

void hardness_criterion() {
  auto start = std::chrono::steady_clock::now();

  // Antimatroid axioms and the extraction bound over every feasible set,
  // exhaustively for small orders, sampled beyond.
  auto check_instance = [](const hardness::SourceGraph& g) {
    hardness::ReductionInstance inst = hardness::ReductionInstance::build(g);
    SetFamily fam = reduction_family(inst);
    require(verify_antimatroid(fam).ok, "reduction family fails the antimatroid axioms");
    for (const VertexSet& f : fam.sets()) {
      hardness::Extraction ex = hardness::extract_independent_set(inst, f);
      for (VertexId a : ex.independent_vertices) {
        for (VertexId b : ex.independent_vertices) {
          require(a == b || !g.adjacent(a, b), "extracted set is not independent");
        }
      }
      require(inst.delta() *
                      Rational(static_cast<long long>(ex.independent_vertices.size())) >=
                  inst.weight_sum(f),
              "extraction bound fails");
    }
  };

  for (int n = 0; n <= 4; ++n) for_each_labeled_graph(n, 12 - n, check_instance);
  for_each_labeled_graph(5, 7, check_instance);
  std::mt19937 rng(90001);
  for (int t = 0; t < 60; ++t) {
    hardness::SourceGraph g = random_source_graph(rng, 10, 12);
    check_instance(g);
  }

  // Optimum linkage: max feasible weight equals delta times the maximum
  // independent set size. The vertex-subset scan is cross-checked against
  // the full element-subset scan wherever the latter is tractable.
  auto check_linkage = [](const hardness::SourceGraph& g) {
    hardness::ReductionInstance inst = hardness::ReductionInstance::build(g);
    Rational got = vertex_scan_max_weight(inst);
    if (g.vertex_count() + g.edge_count() <= 14) {
      require(got == full_scan_max_weight(inst), "vertex scan differs from the full scan");
    }
    require(got == inst.delta() * Rational(max_independent_set_size(g)),
            "max feasible weight != delta * max independent set");
  };

  for (int n = 0; n <= 4; ++n) for_each_labeled_graph(n, 6, check_linkage);
  std::mt19937 rng2(90002);
  for (int t = 0; t < 120; ++t) {
    hardness::SourceGraph g = random_source_graph(rng2, 8, 18);
    check_linkage(g);
  }

  require(seconds_since(start) < 60.0, "hardness criterion exceeded 60 s");
}

// --- criterion 10 ----------------------------------------------------------

void pair_removal_criterion() {
  std::mt19937 rng(100001);
  for (int t = 0; t < 200; ++t) {
    SplitGraph g = random_split_graph(rng, 2, 12);
    const auto& ids = g.vertices().ids();
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        bool feasible = is_feasible(g, g.vertices().difference(VertexSet{ids[a], ids[b]}));
        bool expected =
            g.adjacent(ids[a], ids[b]) || g.is_isolated(ids[a]) || g.is_isolated(ids[b]);
        require(feasible == expected, "pair-removal law violated");
      }
    }
  }
}

// --- polynomial-behavior smoke test ----------------------------------------

void smoke_test() {
  std::mt19937 rng(123456);
  std::vector<VertexId> clique, independent;
  for (int v = 1; v <= 1000; ++v) clique.push_back(v);
  for (int v = 1001; v <= 2000; ++v) independent.push_back(v);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId k : clique) {
    for (VertexId i : independent) {
      if (rng_below(rng, 100) < 1) edges.emplace_back(k, i);
    }
  }
  SplitGraph g = SplitGraph::validate(clique, independent, edges);
  WeightFn w = random_int_weights(rng, g.vertices(), -9, 9);

  auto start = std::chrono::steady_clock::now();
  OptResult r = max_weight_feasible(g, w);
  double elapsed = seconds_since(start);
  require(is_feasible(g, r.best_set), "smoke optimum infeasible");
  require(w.sum(r.best_set) == r.best_weight, "smoke weight mismatch");
  require(elapsed < 10.0, "2000-vertex maxweight took " + std::to_string(elapsed) + " s");
}

struct Criterion {
  std::string name;
  std::function<void()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 worked-example lattice (29 = 21+4+1+3)", worked_example_lattice},
      {"2 fos fixtures", fos_fixtures},
      {"3 path poset figure + count on 200 graphs", path_poset_criterion},
      {"4 star/i-feasible filter decomposition on 200 graphs", decomposition_criterion},
      {"5 optimizer vs brute force on 500 graphs", optimizer_criterion},
      {"6 circuits + free sets vs trace oracle on 200 graphs", circuits_criterion},
      {"7 reconstruction round-trips + 50 mutations", reconstruction_criterion},
      {"8 m-convexity (exhaustive + counterexample fixture)", m_convexity_criterion},
      {"9 hardness reduction (axioms, bound, optimum linkage)", hardness_criterion},
      {"10 pair-removal law on 200 graphs", pair_removal_criterion},
      {"smoke maxweight on 2000 vertices < 10 s", smoke_test},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    try {
      c.run();
      std::cout << "PASS  criterion " << c.name << "  (" << seconds_since(start) << " s)\n";
    } catch (const Failure& f) {
      ++failures;
      std::cout << "FAIL  criterion " << c.name << ": " << f.message << '\n';
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL  criterion " << c.name << ": unexpected error: " << e.what() << '\n';
    }
  }
  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
