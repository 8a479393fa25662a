#include "pgraph/property.hpp"

#include <charconv>
#include <cmath>

#include "pgraph/errors.hpp"

namespace pgraph {

ValueClass value_class(const PropertyValue& v) noexcept {
  switch (v.index()) {
    case 0: return ValueClass::Boolean;
    case 1:
    case 2: return ValueClass::Numeric;
    default: return ValueClass::Text;
  }
}

namespace {

// x86-64 long double has a 64-bit mantissa, wide enough to hold any int64
// exactly, so the mixed int/double comparison loses nothing.
int compare_numeric(const PropertyValue& a, const PropertyValue& b) noexcept {
  if (std::holds_alternative<std::int64_t>(a) && std::holds_alternative<std::int64_t>(b)) {
    auto x = std::get<std::int64_t>(a), y = std::get<std::int64_t>(b);
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  long double x = std::holds_alternative<std::int64_t>(a)
                      ? static_cast<long double>(std::get<std::int64_t>(a))
                      : static_cast<long double>(std::get<double>(a));
  long double y = std::holds_alternative<std::int64_t>(b)
                      ? static_cast<long double>(std::get<std::int64_t>(b))
                      : static_cast<long double>(std::get<double>(b));
  return x < y ? -1 : (x > y ? 1 : 0);
}

}  // namespace

int compare_values(const PropertyValue& a, const PropertyValue& b) noexcept {
  ValueClass ca = value_class(a), cb = value_class(b);
  if (ca != cb) return static_cast<int>(ca) < static_cast<int>(cb) ? -1 : 1;
  switch (ca) {
    case ValueClass::Boolean: {
      bool x = std::get<bool>(a), y = std::get<bool>(b);
      return x == y ? 0 : (x ? 1 : -1);
    }
    case ValueClass::Numeric:
      return compare_numeric(a, b);
    case ValueClass::Text: {
      int c = std::get<std::string>(a).compare(std::get<std::string>(b));
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
  }
  return 0;
}

const char* comparator_token(Comparator c) noexcept {
  switch (c) {
    case Comparator::Eq: return "=";
    case Comparator::Ne: return "!=";
    case Comparator::Lt: return "<";
    case Comparator::Le: return "<=";
    case Comparator::Gt: return ">";
    case Comparator::Ge: return ">=";
  }
  return "?";
}

std::optional<Comparator> comparator_from_token(std::string_view token) noexcept {
  if (token == "=" || token == "==") return Comparator::Eq;
  if (token == "!=") return Comparator::Ne;
  if (token == "<") return Comparator::Lt;
  if (token == "<=") return Comparator::Le;
  if (token == ">") return Comparator::Gt;
  if (token == ">=") return Comparator::Ge;
  return std::nullopt;
}

bool apply_comparator(const PropertyValue& lhs, Comparator cmp, const PropertyValue& rhs) {
  if (cmp == Comparator::Eq) return values_equal(lhs, rhs);
  if (cmp == Comparator::Ne) return !values_equal(lhs, rhs);
  if (value_class(lhs) != ValueClass::Numeric || value_class(rhs) != ValueClass::Numeric) {
    throw Error(Errc::TypeMismatch, "order comparison requires numeric operands");
  }
  int c = compare_values(lhs, rhs);
  switch (cmp) {
    case Comparator::Lt: return c < 0;
    case Comparator::Le: return c <= 0;
    case Comparator::Gt: return c > 0;
    case Comparator::Ge: return c >= 0;
    default: return false;  // unreachable
  }
}

namespace {

std::string format_double(double d) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  std::string s(buf, ptr);
  // Keep the token re-parseable as a float: "100" would read back as an int.
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string quote_string(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += ch;
    }
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_value(const PropertyValue& v) {
  switch (v.index()) {
    case 0: return std::get<bool>(v) ? "true" : "false";
    case 1: return std::to_string(std::get<std::int64_t>(v));
    case 2: return format_double(std::get<double>(v));
    default: return quote_string(std::get<std::string>(v));
  }
}

std::string display_value(const PropertyValue& v) {
  if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
  return format_value(v);
}

}  // namespace pgraph
