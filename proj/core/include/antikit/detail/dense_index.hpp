#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "antikit/vertex_set.hpp"

namespace antikit::detail {

/// Maps a fixed vertex set onto bit positions 0..n-1 (in increasing id
/// order) so subset scans can run on machine words. Only meaningful for
/// grounds of at most 64 vertices; the exponential helpers enforce their own
/// smaller bounds before using it.
class DenseIndex {
 public:
  explicit DenseIndex(const VertexSet& ground) : ids_(ground.ids()) {}

  int size() const { return static_cast<int>(ids_.size()); }
  VertexId id(int pos) const { return ids_[static_cast<std::size_t>(pos)]; }

  int pos(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return -1;
    return static_cast<int>(it - ids_.begin());
  }

  std::uint64_t mask_of(const VertexSet& s) const {
    std::uint64_t m = 0;
    for (VertexId v : s) m |= std::uint64_t{1} << pos(v);
    return m;
  }

  VertexSet set_of(std::uint64_t mask) const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
      int b = std::countr_zero(mask);
      out.push_back(ids_[static_cast<std::size_t>(b)]);
      mask &= mask - 1;
    }
    return VertexSet(std::move(out));
  }

  std::uint64_t full_mask() const {
    return ids_.empty() ? 0 : (~std::uint64_t{0} >> (64 - ids_.size()));
  }

 private:
  std::vector<VertexId> ids_;
};

/// (size, lexicographic) order on masks whose bit positions follow
/// increasing vertex id: among equal popcounts, the set owning the lowest
/// differing bit comes first.
inline bool mask_family_less(std::uint64_t a, std::uint64_t b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  std::uint64_t d = a ^ b;
  if (d == 0) return false;
  return (a >> std::countr_zero(d)) & 1;
}

}  // namespace antikit::detail
