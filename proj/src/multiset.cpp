#include "pgraph/multiset.hpp"

#include <algorithm>

#include "pgraph/errors.hpp"

namespace pgraph {

const char* frontier_kind_name(FrontierKind k) noexcept {
  switch (k) {
    case FrontierKind::Vertices: return "vertices";
    case FrontierKind::Edges: return "edges";
    case FrontierKind::Values: return "values";
  }
  return "?";
}

Multiset Multiset::vertices(std::initializer_list<std::uint64_t> ids) {
  Multiset ms(FrontierKind::Vertices);
  for (auto id : ids) ms.add(id);
  return ms;
}

Multiset Multiset::edges(std::initializer_list<std::uint64_t> ids) {
  Multiset ms(FrontierKind::Edges);
  for (auto id : ids) ms.add(id);
  return ms;
}

Multiset Multiset::values(std::initializer_list<PropertyValue> vals) {
  Multiset ms(FrontierKind::Values);
  for (const auto& v : vals) ms.add(v);
  return ms;
}

bool Multiset::empty() const noexcept {
  return kind_ == FrontierKind::Values ? values_.empty() : ids_.empty();
}

std::uint64_t Multiset::cardinality() const noexcept {
  std::uint64_t total = 0;
  if (kind_ == FrontierKind::Values) {
    for (const auto& [v, n] : values_) total += n;
  } else {
    for (const auto& [id, n] : ids_) total += n;
  }
  return total;
}

std::size_t Multiset::distinct() const noexcept {
  return kind_ == FrontierKind::Values ? values_.size() : ids_.size();
}

void Multiset::add(std::uint64_t id, std::uint64_t multiplicity) {
  if (kind_ == FrontierKind::Values)
    throw Error(Errc::KindMismatch, "cannot add an element id to a value multiset");
  if (multiplicity == 0) return;
  ids_[id] += multiplicity;
}

void Multiset::add(const PropertyValue& value, std::uint64_t multiplicity) {
  if (kind_ != FrontierKind::Values)
    throw Error(Errc::KindMismatch, "cannot add a value to an element multiset");
  if (multiplicity == 0) return;
  values_[value] += multiplicity;
}

std::uint64_t Multiset::count(std::uint64_t id) const {
  if (kind_ == FrontierKind::Values) return 0;
  auto it = ids_.find(id);
  return it == ids_.end() ? 0 : it->second;
}

std::uint64_t Multiset::count(const PropertyValue& value) const {
  if (kind_ != FrontierKind::Values) return 0;
  auto it = values_.find(value);
  return it == values_.end() ? 0 : it->second;
}

Multiset& Multiset::merge(const Multiset& other) {
  if (kind_ != other.kind_)
    throw Error(Errc::KindMismatch, std::string("cannot merge ") + frontier_kind_name(other.kind_) +
                                        " into " + frontier_kind_name(kind_));
  if (kind_ == FrontierKind::Values) {
    for (const auto& [v, n] : other.values_) values_[v] += n;
  } else {
    for (const auto& [id, n] : other.ids_) ids_[id] += n;
  }
  return *this;
}

Multiset Multiset::scaled(std::uint64_t factor) const {
  Multiset out(kind_);
  if (factor == 0) return out;
  if (kind_ == FrontierKind::Values) {
    for (const auto& [v, n] : values_) out.values_[v] = n * factor;
  } else {
    for (const auto& [id, n] : ids_) out.ids_[id] = n * factor;
  }
  return out;
}

bool Multiset::operator==(const Multiset& other) const {
  return kind_ == other.kind_ && ids_ == other.ids_ &&
         std::equal(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                    [](const auto& a, const auto& b) {
                      return values_equal(a.first, b.first) && a.second == b.second;
                    });
}

const Multiset::IdEntries& Multiset::id_entries() const {
  if (kind_ == FrontierKind::Values)
    throw Error(Errc::KindMismatch, "value multiset has no id entries");
  return ids_;
}

const Multiset::ValueEntries& Multiset::value_entries() const {
  if (kind_ != FrontierKind::Values)
    throw Error(Errc::KindMismatch, "element multiset has no value entries");
  return values_;
}

std::vector<RankedElement> rank_elements(const Multiset& ms) {
  std::vector<RankedElement> out;
  out.reserve(ms.distinct());
  for (const auto& [id, n] : ms.id_entries()) out.push_back({id, n});
  // Map iteration is already ascending by id; a stable sort on count keeps
  // that order within ties.
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedElement& a, const RankedElement& b) { return a.count > b.count; });
  return out;
}

std::vector<RankedValue> rank_values(const Multiset& ms) {
  std::vector<RankedValue> out;
  out.reserve(ms.distinct());
  for (const auto& [v, n] : ms.value_entries()) out.push_back({v, n});
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedValue& a, const RankedValue& b) { return a.count > b.count; });
  return out;
}

Multiset dedupe(const Multiset& ms) {
  Multiset out(ms.kind());
  if (ms.kind() == FrontierKind::Values) {
    for (const auto& [v, n] : ms.value_entries()) out.add(v, 1);
  } else {
    for (const auto& [id, n] : ms.id_entries()) out.add(id, 1);
  }
  return out;
}

}  // namespace pgraph
