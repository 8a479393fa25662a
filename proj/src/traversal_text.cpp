#include "pgraph/traversal_text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "pgraph/errors.hpp"

namespace pgraph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on a separator at nesting depth zero, respecting double quotes.
std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  int depth = 0;
  bool in_quotes = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '\\' && i + 1 < text.size()) {
        ++i;
      } else if (c == '"') {
        in_quotes = false;
      }
      continue;
    }
    if (c == '"') {
      in_quotes = true;
    } else if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
    } else if (c == sep && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

bool parse_polarity(std::string_view tok, std::size_t pos) {
  tok = trim(tok);
  if (tok == "+") return true;
  if (tok == "-") return false;
  throw ParseError(1, pos + 1, "expected polarity '+' or '-', got '" + std::string(tok) + "'");
}

Step parse_step(std::string_view raw, std::size_t pos) {
  std::string_view text = trim(raw);
  if (text.empty()) throw ParseError(1, pos + 1, "empty step");
  auto paren = text.find('(');
  std::string_view name = trim(paren == std::string_view::npos ? text : text.substr(0, paren));
  std::vector<std::string_view> args;
  if (paren != std::string_view::npos) {
    if (text.back() != ')') throw ParseError(1, pos + 1, "missing ')' in step");
    std::string_view inner = text.substr(paren + 1, text.size() - paren - 2);
    for (auto part : split_top_level(inner, ',')) args.push_back(trim(part));
  }

  auto want = [&](std::size_t n) {
    if (args.size() != n) {
      throw ParseError(1, pos + 1,
                       std::string(name) + " expects " + std::to_string(n) + " argument(s)");
    }
  };

  if (name == "outE") { want(0); return OutEdgesStep{}; }
  if (name == "inE") { want(0); return InEdgesStep{}; }
  if (name == "outV") { want(0); return TailVerticesStep{}; }
  if (name == "inV") { want(0); return HeadVerticesStep{}; }
  if (name == "props") {
    want(1);
    if (args[0].empty()) throw ParseError(1, pos + 1, "props key must be nonempty");
    return PropsStep{std::string(args[0])};
  }
  if (name == "labelFilter") {
    want(2);
    bool allow = parse_polarity(args[0], pos);
    if (args[1].empty()) throw ParseError(1, pos + 1, "label must be nonempty");
    return LabelFilterStep{std::string(args[1]), allow};
  }
  if (name == "propFilter") {
    want(4);
    bool allow = parse_polarity(args[0], pos);
    if (args[1].empty()) throw ParseError(1, pos + 1, "property key must be nonempty");
    auto cmp = comparator_from_token(args[2]);
    if (!cmp) throw ParseError(1, pos + 1, "unknown comparator '" + std::string(args[2]) + "'");
    return PropFilterStep{std::string(args[1]), *cmp, parse_cli_value(args[3]), allow};
  }
  if (name == "elemFilter") {
    want(2);
    bool allow = parse_polarity(args[0], pos);
    auto colon = args[1].find(':');
    if (colon == std::string_view::npos)
      throw ParseError(1, pos + 1, "elemFilter expects kind:id, e.g. v:3");
    std::string_view kind_tok = trim(args[1].substr(0, colon));
    std::string_view id_tok = trim(args[1].substr(colon + 1));
    FrontierKind kind;
    if (kind_tok == "v") {
      kind = FrontierKind::Vertices;
    } else if (kind_tok == "e") {
      kind = FrontierKind::Edges;
    } else {
      throw ParseError(1, pos + 1, "element kind must be 'v' or 'e'");
    }
    std::uint64_t id = 0;
    auto [ptr, ec] = std::from_chars(id_tok.data(), id_tok.data() + id_tok.size(), id);
    if (ec != std::errc{} || ptr != id_tok.data() + id_tok.size())
      throw ParseError(1, pos + 1, "invalid element id '" + std::string(id_tok) + "'");
    return ElementFilterStep{kind, id, allow};
  }
  throw ParseError(1, pos + 1, "unknown step '" + std::string(name) + "'");
}

}  // namespace

Traversal parse_pipeline(std::string_view text) {
  std::vector<Step> steps;
  if (!trim(text).empty()) {
    std::size_t offset = 0;
    for (auto part : split_top_level(text, '|')) {
      steps.push_back(parse_step(part, offset));
      offset += part.size() + 1;
    }
  }
  return Traversal::compose(std::move(steps));
}

PropertyValue parse_cli_value(std::string_view text) {
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
    return std::string(text.substr(1, text.size() - 2));
  }
  if (text == "true") return true;
  if (text == "false") return false;
  {
    std::int64_t iv = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), iv);
    if (ec == std::errc{} && ptr == text.data() + text.size()) return iv;
  }
  {
    double dv = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), dv);
    if (ec == std::errc{} && ptr == text.data() + text.size() && std::isfinite(dv)) return dv;
  }
  return std::string(text);
}

}  // namespace pgraph
