#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "pgraph/property.hpp"

namespace pgraph {

enum class FrontierKind { Vertices, Edges, Values };

const char* frontier_kind_name(FrontierKind k) noexcept;

/// Unordered collection of element references (or property values) with
/// positive multiplicities — the frontier that traversal steps transform.
/// Entries are stored as value -> count, so repeated arrivals accumulate.
class Multiset {
 public:
  explicit Multiset(FrontierKind kind) : kind_(kind) {}

  static Multiset vertices(std::initializer_list<std::uint64_t> ids = {});
  static Multiset edges(std::initializer_list<std::uint64_t> ids = {});
  static Multiset values(std::initializer_list<PropertyValue> vals = {});

  FrontierKind kind() const noexcept { return kind_; }
  bool is_element_kind() const noexcept { return kind_ != FrontierKind::Values; }
  bool empty() const noexcept;

  /// Total cardinality (sum of multiplicities).
  std::uint64_t cardinality() const noexcept;
  std::size_t distinct() const noexcept;

  void add(std::uint64_t id, std::uint64_t multiplicity = 1);
  void add(const PropertyValue& value, std::uint64_t multiplicity = 1);

  std::uint64_t count(std::uint64_t id) const;
  std::uint64_t count(const PropertyValue& value) const;

  /// Multiset union (⊎): multiplicities add. Kinds must match.
  Multiset& merge(const Multiset& other);
  Multiset scaled(std::uint64_t factor) const;

  bool operator==(const Multiset& other) const;

  using IdEntries = std::map<std::uint64_t, std::uint64_t>;
  using ValueEntries = std::map<PropertyValue, std::uint64_t, PropertyLess>;

  /// Entry views; throw Error(KindMismatch) when the kind does not match.
  const IdEntries& id_entries() const;
  const ValueEntries& value_entries() const;

 private:
  FrontierKind kind_;
  IdEntries ids_;
  ValueEntries values_;
};

struct RankedElement {
  std::uint64_t id = 0;
  std::uint64_t count = 0;
  bool operator==(const RankedElement&) const = default;
};

struct RankedValue {
  PropertyValue value;
  std::uint64_t count = 0;
};

/// Descending multiplicity, ties broken by ascending id.
std::vector<RankedElement> rank_elements(const Multiset& ms);

/// Descending multiplicity, ties broken by ascending value order.
std::vector<RankedValue> rank_values(const Multiset& ms);

/// Same support with every multiplicity forced to 1.
Multiset dedupe(const Multiset& ms);

}  // namespace pgraph
