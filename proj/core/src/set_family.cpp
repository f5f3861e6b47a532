#include "antikit/set_family.hpp"

#include <algorithm>

#include "antikit/errors.hpp"

namespace antikit {

SetFamily::SetFamily(VertexSet ground, std::vector<VertexSet> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
  for (const VertexSet& s : sets_) {
    if (!s.subset_of(ground_)) {
      fail(ErrorKind::UnknownVertex, "family member not contained in the ground set");
    }
  }
  std::sort(sets_.begin(), sets_.end(), family_less);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetFamily::contains(const VertexSet& s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, family_less);
}

}  // namespace antikit
