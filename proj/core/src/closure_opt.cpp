#include "antikit/closure_opt.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "antikit/detail/dense_index.hpp"
#include "antikit/errors.hpp"

namespace antikit {

const Rational& WeightFn::at(VertexId v) const {
  auto it = weights_.find(v);
  if (it == weights_.end()) {
    fail(ErrorKind::MissingWeight, "vertex " + std::to_string(v) + " has no weight");
  }
  return it->second;
}

Rational WeightFn::sum(const VertexSet& s) const {
  Rational total(0);
  for (VertexId v : s) total += at(v);
  return total;
}

Rational WeightFn::abs_total() const {
  Rational total(0);
  for (const auto& [v, w] : weights_) {
    (void)v;
    total += rational_abs(w);
  }
  return total;
}

WeightFn WeightFn::uniform(const VertexSet& ground, const Rational& w) {
  WeightFn fn;
  for (VertexId v : ground) fn.set(v, w);
  return fn;
}

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : node_count_(node_count), source_(source), sink_(sink) {
  if (node_count < 2 || source < 0 || source >= node_count || sink < 0 || sink >= node_count ||
      source == sink) {
    fail(ErrorKind::InvalidStructure, "flow network needs distinct source and sink nodes");
  }
}

void FlowNetwork::add_arc(int from, int to, Rational capacity) {
  if (from < 0 || from >= node_count_ || to < 0 || to >= node_count_) {
    fail(ErrorKind::InvalidStructure, "arc endpoint out of range");
  }
  if (from == to) fail(ErrorKind::InvalidStructure, "arc loop");
  if (to == source_) fail(ErrorKind::InvalidStructure, "arc into the source");
  if (from == sink_) fail(ErrorKind::InvalidStructure, "arc out of the sink");
  if (capacity < Rational(0)) fail(ErrorKind::InvalidStructure, "negative capacity");
  arcs_.push_back({from, to, std::move(capacity)});
}

namespace {

// Dinic: BFS level graph, then blocking flows via DFS with per-node arc
// cursors. Works unchanged on exact rationals; the phase count is bounded by
// the node count, so termination never depends on integrality.
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net) : n_(net.node_count()), adj_(net.node_count()) {
    for (const auto& arc : net.arcs()) add_edge(arc.from, arc.to, arc.capacity);
  }

  Rational run(int s, int t) {
    Rational total(0);
    while (bfs(s, t)) {
      iter_.assign(static_cast<std::size_t>(n_), 0);
      while (true) {
        Rational pushed = dfs(s, t, Rational(-1));
        if (pushed == Rational(0)) break;
        total += pushed;
      }
    }
    return total;
  }

  std::vector<int> residual_reachable(int s) const {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n_), 0);
    std::queue<int> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Edge& e : adj_[static_cast<std::size_t>(u)]) {
        if (e.cap > Rational(0) && !seen[static_cast<std::size_t>(e.to)]) {
          seen[static_cast<std::size_t>(e.to)] = 1;
          q.push(e.to);
        }
      }
    }
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
      if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return out;
  }

 private:
  struct Edge {
    int to;
    Rational cap;
    std::size_t rev;
  };

  void add_edge(int from, int to, Rational cap) {
    adj_[static_cast<std::size_t>(from)].push_back(
        {to, std::move(cap), adj_[static_cast<std::size_t>(to)].size()});
    adj_[static_cast<std::size_t>(to)].push_back(
        {from, Rational(0), adj_[static_cast<std::size_t>(from)].size() - 1});
  }

  bool bfs(int s, int t) {
    level_.assign(static_cast<std::size_t>(n_), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Edge& e : adj_[static_cast<std::size_t>(u)]) {
        if (e.cap > Rational(0) && level_[static_cast<std::size_t>(e.to)] < 0) {
          level_[static_cast<std::size_t>(e.to)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  // limit < 0 means unbounded.
  Rational dfs(int u, int t, Rational limit) {
    if (u == t) return limit;
    for (std::size_t& i = iter_[static_cast<std::size_t>(u)];
         i < adj_[static_cast<std::size_t>(u)].size(); ++i) {
      Edge& e = adj_[static_cast<std::size_t>(u)][i];
      if (e.cap <= Rational(0)) continue;
      if (level_[static_cast<std::size_t>(e.to)] != level_[static_cast<std::size_t>(u)] + 1) {
        continue;
      }
      Rational pass = (limit < Rational(0) || e.cap < limit) ? e.cap : limit;
      Rational pushed = dfs(e.to, t, pass);
      if (pushed > Rational(0)) {
        e.cap -= pushed;
        adj_[static_cast<std::size_t>(e.to)][e.rev].cap += pushed;
        return pushed;
      }
    }
    return Rational(0);
  }

  int n_;
  std::vector<std::vector<Edge>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
  Dinic solver(net);
  MaxFlowResult result;
  result.value = solver.run(net.source(), net.sink());
  result.source_side = solver.residual_reachable(net.source());
  return result;
}

ClosureResult max_closure(const Poset& poset, const WeightFn& weights, const VertexSet& forced) {
  if (!forced.subset_of(poset.ground())) {
    fail(ErrorKind::ForcedNotClosed, "forced set contains elements outside the poset ground");
  }

  const VertexSet& ground = poset.ground();
  detail::DenseIndex index(ground);
  int n = index.size();
  int source = n;
  int sink = n + 1;

  Rational total_abs(0);
  for (VertexId v : ground) total_abs += rational_abs(weights.at(v));
  // Any finite cut stays below this, so these arcs are never crossed.
  Rational uncrossable = total_abs + Rational(1);

  FlowNetwork net(n + 2, source, sink);
  for (int p = 0; p < n; ++p) {
    const Rational& w = weights.at(index.id(p));
    if (w > Rational(0)) net.add_arc(source, p, w);
    if (w < Rational(0)) net.add_arc(p, sink, -w);
  }
  for (auto [u, v] : poset.covers()) {
    net.add_arc(index.pos(u), index.pos(v), uncrossable);
  }
  for (VertexId v : forced) net.add_arc(source, index.pos(v), uncrossable);

  MaxFlowResult flow = max_flow(net);
  std::vector<VertexId> chosen;
  for (int node : flow.source_side) {
    if (node < n) chosen.push_back(index.id(node));
  }

  ClosureResult result;
  result.filter = VertexSet(std::move(chosen));
  result.weight = weights.sum(result.filter);
  return result;
}

namespace {

struct Candidate {
  VertexSet set;
  Rational weight;
};

// Larger weight wins; ties prefer the smaller set, then lexicographic.
bool better(const Candidate& a, const Candidate& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return family_less(a.set, b.set);
}

}  // namespace

OptResult max_weight_feasible(const SplitGraph& g, const WeightFn& weights, OptSense sense) {
  WeightFn effective;
  for (VertexId v : g.vertices()) {
    effective.set(v, sense == OptSense::Min ? -weights.at(v) : weights.at(v));
  }

  Poset prec = build_prec(g);
  ClosureResult star = max_closure(prec, effective);
  Candidate best{star.filter, star.weight};

  for (VertexId i : g.independent()) {
    const VertexSet& n_i = g.cross_neighbors(i);
    if (n_i.empty()) continue;  // no i-feasible sets for this i

    VertexSet base = fos(g, i);
    Rational base_weight = effective.sum(base);
    Poset sub = prec.restrict(ufs(g, i));

    ClosureResult unconstrained = max_closure(sub, effective);
    if (!unconstrained.filter.intersect(g.clique()).empty()) {
      Candidate cand{base.unite(unconstrained.filter), base_weight + unconstrained.weight};
      if (better(cand, best)) best = cand;
      continue;
    }
    // The optimal filter avoided K entirely; an i-feasible set needs some
    // neighbor of i, so solve once per forced choice.
    for (VertexId k : n_i) {
      ClosureResult forced = max_closure(sub, effective, VertexSet{k});
      Candidate cand{base.unite(forced.filter), base_weight + forced.weight};
      if (better(cand, best)) best = cand;
    }
  }

  OptResult result;
  result.best_set = best.set;
  result.best_weight = sense == OptSense::Min ? -best.weight : best.weight;
  result.feasible_class = classify(g, result.best_set);
  return result;
}

}  // namespace antikit
