#pragma once

#include <cstddef>
#include <vector>

#include "antikit/vertex_set.hpp"

namespace antikit {

/// A family of vertex sets over an explicit ground set. Member sets are kept
/// deduplicated and in canonical (size, lexicographic) order.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(VertexSet ground, std::vector<VertexSet> sets);

  const VertexSet& ground() const { return ground_; }
  const std::vector<VertexSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  bool contains(const VertexSet& s) const;

  bool operator==(const SetFamily&) const = default;

 private:
  VertexSet ground_;
  std::vector<VertexSet> sets_;
};

}  // namespace antikit
