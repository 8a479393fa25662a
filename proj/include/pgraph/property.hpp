#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace pgraph {

/// Scalar property value: boolean, 64-bit signed integer, 64-bit float, or string.
using PropertyValue = std::variant<bool, std::int64_t, double, std::string>;

/// Values fall into three comparison classes. Integers and doubles share the
/// Numeric class so that `25` and `25.0` compare as the same value; equality
/// and the ordering used by indexes stay mutually consistent that way.
enum class ValueClass { Boolean, Numeric, Text };

ValueClass value_class(const PropertyValue& v) noexcept;

/// Total order over all property values: Boolean < Numeric < Text, natural
/// order within a class. Numeric comparison is exact across int64/double.
/// Returns <0, 0, >0.
int compare_values(const PropertyValue& a, const PropertyValue& b) noexcept;

inline bool values_equal(const PropertyValue& a, const PropertyValue& b) noexcept {
  return compare_values(a, b) == 0;
}

struct PropertyLess {
  bool operator()(const PropertyValue& a, const PropertyValue& b) const noexcept {
    return compare_values(a, b) < 0;
  }
};

enum class Comparator { Eq, Ne, Lt, Le, Gt, Ge };

const char* comparator_token(Comparator c) noexcept;
std::optional<Comparator> comparator_from_token(std::string_view token) noexcept;

/// Evaluates `lhs cmp rhs`. Eq/Ne are defined for every value pair; the four
/// order comparators require both operands to be Numeric and throw
/// Error(TypeMismatch) otherwise.
bool apply_comparator(const PropertyValue& lhs, Comparator cmp, const PropertyValue& rhs);

using PropertyMap = std::map<std::string, PropertyValue, std::less<>>;

/// Serialized token form used by the graph text format: bare integers/floats,
/// true/false, double-quoted strings with backslash escapes.
std::string format_value(const PropertyValue& v);

/// Display form for CLI output: like format_value but strings are emitted raw.
std::string display_value(const PropertyValue& v);

}  // namespace pgraph
