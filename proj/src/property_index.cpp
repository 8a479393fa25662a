#include "pgraph/property_index.hpp"

#include <algorithm>

namespace pgraph {

OrderedIndex OrderedIndex::build(const Graph& g, std::string key) {
  OrderedIndex idx;
  idx.key_ = std::move(key);
  std::vector<std::pair<PropertyValue, VertexId>> pairs;
  for (VertexId id : g.vertex_ids_sorted()) {
    if (const PropertyValue* v = g.vertex(id).property(idx.key_)) pairs.emplace_back(*v, id);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return compare_values(a.first, b.first) < 0;
  });
  for (auto& [value, id] : pairs) {
    if (idx.entries_.empty() || !values_equal(idx.entries_.back().first, value)) {
      idx.entries_.emplace_back(value, std::vector<VertexId>{});
    }
    idx.entries_.back().second.push_back(id);
  }
  idx.indexed_vertices_ = pairs.size();
  return idx;
}

OrderedIndex::LookupOutcome OrderedIndex::lookup(const PropertyValue& value) const {
  // Binary search with a three-way probe per step, like guessing a number
  // against higher/lower/equal answers; early exit on equality.
  std::uint64_t comparisons = 0;
  Multiset found(FrontierKind::Vertices);
  std::int64_t lo = 0;
  std::int64_t hi = static_cast<std::int64_t>(entries_.size()) - 1;
  while (lo <= hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    ++comparisons;
    int c = compare_values(value, entries_[static_cast<std::size_t>(mid)].first);
    if (c == 0) {
      for (VertexId id : entries_[static_cast<std::size_t>(mid)].second) found.add(id, 1);
      break;
    }
    if (c < 0) {
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  total_comparisons_.fetch_add(comparisons, std::memory_order_relaxed);
  return {std::move(found), comparisons};
}

}  // namespace pgraph
