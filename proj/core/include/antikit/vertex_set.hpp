#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace antikit {

/// Vertex labels are externally supplied non-negative integers and are never
/// renumbered.
using VertexId = int;

/// Immutable ordered set of vertex ids with value semantics.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids) : ids_(ids) { canonicalize(); }
  explicit VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) { canonicalize(); }

  const std::vector<VertexId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }

  bool subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  VertexSet unite(const VertexSet& other) const {
    std::vector<VertexId> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  VertexSet intersect(const VertexSet& other) const {
    std::vector<VertexId> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  VertexSet difference(const VertexSet& other) const {
    std::vector<VertexId> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  VertexSet with(VertexId v) const { return unite(VertexSet{v}); }
  VertexSet without(VertexId v) const { return difference(VertexSet{v}); }

  bool operator==(const VertexSet&) const = default;

 private:
  static VertexSet from_sorted(std::vector<VertexId> sorted) {
    VertexSet s;
    s.ids_ = std::move(sorted);
    return s;
  }

  void canonicalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<VertexId> ids_;
};

/// Canonical ordering used for every family-valued output: smaller sets
/// first, ties broken lexicographically on the sorted id sequences.
inline bool family_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace antikit
