#include "antikit/poset.hpp"

#include <algorithm>
#include <string>

#include "antikit/detail/dense_index.hpp"
#include "antikit/errors.hpp"

namespace antikit {

Poset::Poset(VertexSet ground, std::vector<std::pair<VertexId, VertexId>> covers)
    : ground_(std::move(ground)), covers_(std::move(covers)) {
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());

  VertexSet sources;
  VertexSet targets;
  for (auto [u, v] : covers_) {
    if (!ground_.contains(u)) fail(ErrorKind::UnknownVertex, std::to_string(u));
    if (!ground_.contains(v)) fail(ErrorKind::UnknownVertex, std::to_string(v));
    if (u == v) fail(ErrorKind::InvalidStructure, "reflexive pair at " + std::to_string(u));
    sources = sources.with(u);
    targets = targets.with(v);
  }
  VertexSet middle = sources.intersect(targets);
  if (!middle.empty()) {
    fail(ErrorKind::InvalidStructure,
         "element " + std::to_string(*middle.begin()) + " creates a chain of height > 2");
  }
}

void Poset::check_member(VertexId v) const {
  if (!ground_.contains(v)) fail(ErrorKind::UnknownVertex, std::to_string(v));
}

VertexSet Poset::successors(VertexId v) const {
  check_member(v);
  std::vector<VertexId> out;
  for (auto [u, w] : covers_) {
    if (u == v) out.push_back(w);
  }
  return VertexSet(std::move(out));
}

bool Poset::is_filter(const VertexSet& s) const {
  if (!s.subset_of(ground_)) fail(ErrorKind::UnknownVertex, "set contains ids outside the poset");
  for (auto [u, v] : covers_) {
    if (s.contains(u) && !s.contains(v)) return false;
  }
  return true;
}

Poset Poset::restrict(const VertexSet& s) const {
  if (!s.subset_of(ground_)) fail(ErrorKind::UnknownVertex, "set contains ids outside the poset");
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (auto [u, v] : covers_) {
    if (s.contains(u) && s.contains(v)) kept.emplace_back(u, v);
  }
  return Poset(s, std::move(kept));
}

SetFamily Poset::enumerate_filters(const BruteForceLimits& limits) const {
  int bound = std::min(limits.subset_enumeration_max, 62);
  if (static_cast<int>(ground_.size()) > bound) {
    fail(ErrorKind::GroundSetTooLarge,
         std::to_string(ground_.size()) + " elements exceeds the subset enumeration bound of " +
             std::to_string(bound));
  }

  // Split the ground into cover sources ("lower") and everything else
  // ("upper", the targets and the isolated elements). A filter is any upper
  // subset T together with lower elements whose successors all lie in T, so
  // the scan is output-sensitive instead of 2^|ground|.
  VertexSet lower;
  for (auto [u, v] : covers_) {
    (void)v;
    lower = lower.with(u);
  }
  VertexSet upper = ground_.difference(lower);

  detail::DenseIndex upper_index(upper);
  detail::DenseIndex lower_index(lower);
  std::vector<std::uint64_t> succ(static_cast<std::size_t>(lower_index.size()), 0);
  for (auto [u, v] : covers_) {
    succ[static_cast<std::size_t>(lower_index.pos(u))] |= std::uint64_t{1} << upper_index.pos(v);
  }

  std::vector<VertexSet> filters;
  std::uint64_t upper_full = upper_index.full_mask();
  std::uint64_t t = 0;
  while (true) {
    std::vector<VertexId> compatible;
    for (int p = 0; p < lower_index.size(); ++p) {
      if ((succ[static_cast<std::size_t>(p)] & ~t) == 0) compatible.push_back(lower_index.id(p));
    }
    VertexSet upper_part = upper_index.set_of(t);
    detail::DenseIndex comp_index((VertexSet(compatible)));
    std::uint64_t comp_full = comp_index.full_mask();
    std::uint64_t l = 0;
    while (true) {
      filters.push_back(upper_part.unite(comp_index.set_of(l)));
      if (l == comp_full) break;
      l = (l - comp_full) & comp_full;  // next subset of comp_full
    }
    if (t == upper_full) break;
    t = (t - upper_full) & upper_full;
  }
  return SetFamily(ground_, std::move(filters));
}

Poset build_prec(const SplitGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> covers(g.cross_edges());
  return Poset(g.vertices(), std::move(covers));
}

}  // namespace antikit
