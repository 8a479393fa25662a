#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pgraph/graph.hpp"
#include "pgraph/multiset.hpp"

namespace pgraph {

/// External ordered index from one property key to the vertices carrying each
/// value. Lookup is a counted binary search over the distinct values; the
/// counter tallies three-way value comparisons.
///
/// The index is a snapshot: rebuild it after mutating the graph. Lookups are
/// pure except for the running comparison total, which is accumulated
/// atomically and therefore safe under concurrent readers.
class OrderedIndex {
 public:
  static OrderedIndex build(const Graph& g, std::string key);

  struct LookupOutcome {
    Multiset vertices;           // multiplicity 1 each
    std::uint64_t comparisons;   // comparisons spent by this lookup
  };

  /// Exact-match lookup; a miss yields an empty multiset.
  LookupOutcome lookup(const PropertyValue& value) const;

  const std::string& key() const noexcept { return key_; }
  std::size_t distinct_values() const noexcept { return entries_.size(); }
  std::size_t indexed_vertices() const noexcept { return indexed_vertices_; }
  std::uint64_t total_comparisons() const noexcept {
    return total_comparisons_.load(std::memory_order_relaxed);
  }

  OrderedIndex(OrderedIndex&& other) noexcept
      : key_(std::move(other.key_)),
        entries_(std::move(other.entries_)),
        indexed_vertices_(other.indexed_vertices_),
        total_comparisons_(other.total_comparisons_.load(std::memory_order_relaxed)) {}
  OrderedIndex& operator=(OrderedIndex&&) = delete;

 private:
  OrderedIndex() = default;

  std::string key_;
  // Sorted by value; each entry lists the vertices holding that value,
  // ascending by id.
  std::vector<std::pair<PropertyValue, std::vector<VertexId>>> entries_;
  std::size_t indexed_vertices_ = 0;
  mutable std::atomic<std::uint64_t> total_comparisons_{0};
};

}  // namespace pgraph
