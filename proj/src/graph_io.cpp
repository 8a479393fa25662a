#include "pgraph/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "pgraph/errors.hpp"

namespace pgraph {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based start column
  bool quoted = false;
};

// Splits one line into whitespace-separated tokens, honoring double quotes
// (with backslash escapes) and '#' comments outside quotes.
std::vector<Token> tokenize(const std::string& line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    Token tok;
    tok.column = i + 1;
    while (i < n && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') {
      if (line[i] == '"') {
        tok.quoted = true;
        ++i;  // opening quote
        bool closed = false;
        while (i < n) {
          char c = line[i];
          if (c == '\\') {
            if (i + 1 >= n) throw ParseError(line_no, i + 1, "dangling backslash escape");
            char esc = line[i + 1];
            switch (esc) {
              case '"': tok.text += '"'; break;
              case '\\': tok.text += '\\'; break;
              case 'n': tok.text += '\n'; break;
              case 't': tok.text += '\t'; break;
              case 'r': tok.text += '\r'; break;
              default:
                throw ParseError(line_no, i + 2, std::string("unknown escape \\") + esc);
            }
            i += 2;
          } else if (c == '"') {
            ++i;
            closed = true;
            break;
          } else {
            tok.text += c;
            ++i;
          }
        }
        if (!closed) throw ParseError(line_no, tok.column, "unterminated string");
      } else {
        tok.text += line[i];
        ++i;
      }
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::uint64_t parse_id(const Token& tok, std::size_t line_no, const char* what) {
  if (tok.quoted) throw ParseError(line_no, tok.column, std::string(what) + " must be a bare integer");
  std::uint64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line_no, tok.column, std::string("invalid ") + what + " '" + tok.text + "'");
  return value;
}

PropertyValue parse_bare_value(const std::string& text, std::size_t line_no, std::size_t column) {
  if (text == "true") return true;
  if (text == "false") return false;
  {
    std::int64_t iv = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, iv);
    if (ec == std::errc{} && ptr == last) return iv;
  }
  {
    double dv = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, dv);
    if (ec == std::errc{} && ptr == last) {
      if (!std::isfinite(dv)) throw ParseError(line_no, column, "non-finite float value");
      return dv;
    }
  }
  throw ParseError(line_no, column,
                   "invalid value '" + text + "' (strings must be double-quoted)");
}

// key=value with the key bare and the value either bare or quoted. Keys
// cannot contain '=', so the first '=' is the separator; any '=' inside a
// quoted value lands after it and stays part of the value.
void parse_property(const Token& tok, std::size_t line_no, PropertyMap& props) {
  auto eq = tok.text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ParseError(line_no, tok.column, "expected key=value, got '" + tok.text + "'");
  std::string key = tok.text.substr(0, eq);
  std::string rest = tok.text.substr(eq + 1);
  PropertyValue value =
      tok.quoted ? PropertyValue(rest) : parse_bare_value(rest, line_no, tok.column + eq + 1);
  if (!props.emplace(std::move(key), std::move(value)).second)
    throw ParseError(line_no, tok.column, "duplicate key '" + tok.text.substr(0, eq) + "'");
}

bool serializable_bare(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '"' || c == '=')
      return false;
  }
  return true;
}

void write_props(const PropertyMap& props, std::ostream& out) {
  for (const auto& [key, value] : props) {
    if (!serializable_bare(key))
      throw Error(Errc::DataError, "property key '" + key + "' cannot be serialized");
    out << ' ' << key << '=' << format_value(value);
  }
}

}  // namespace

Graph load_graph(std::istream& in) {
  Graph g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;
    const Token& head = tokens[0];
    try {
      if (head.text == "V" && !head.quoted) {
        if (tokens.size() < 2) throw ParseError(line_no, head.column, "V needs an id");
        VertexId id = parse_id(tokens[1], line_no, "vertex id");
        PropertyMap props;
        for (std::size_t i = 2; i < tokens.size(); ++i) parse_property(tokens[i], line_no, props);
        g.add_vertex(id, std::move(props));
      } else if (head.text == "E" && !head.quoted) {
        if (tokens.size() < 5)
          throw ParseError(line_no, head.column, "E needs id, label, tail-id, head-id");
        EdgeId id = parse_id(tokens[1], line_no, "edge id");
        if (tokens[2].text.empty())
          throw ParseError(line_no, tokens[2].column, "edge label must be nonempty");
        VertexId tail = parse_id(tokens[3], line_no, "tail id");
        VertexId head_id = parse_id(tokens[4], line_no, "head id");
        PropertyMap props;
        for (std::size_t i = 5; i < tokens.size(); ++i) parse_property(tokens[i], line_no, props);
        g.add_edge(id, tokens[2].text, tail, head_id, std::move(props));
      } else {
        throw ParseError(line_no, head.column, "expected 'V' or 'E', got '" + head.text + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      // Surface semantic construction errors with the offending line.
      throw ParseError(line_no, head.column, e.what());
    }
  }
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::DataError, "cannot open '" + path + "'");
  return load_graph(in);
}

void save_graph(const Graph& g, std::ostream& out) {
  for (VertexId id : g.vertex_ids_sorted()) {
    const Vertex& v = g.vertex(id);
    out << "V " << id;
    write_props(v.properties, out);
    out << '\n';
  }
  for (EdgeId id : g.edge_ids_sorted()) {
    const Edge& e = g.edge(id);
    if (!serializable_bare(e.label))
      throw Error(Errc::DataError, "edge label '" + e.label + "' cannot be serialized");
    out << "E " << id << ' ' << e.label << ' ' << e.tail << ' ' << e.head;
    write_props(e.properties, out);
    out << '\n';
  }
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::DataError, "cannot open '" + path + "' for writing");
  save_graph(g, out);
}

bool graphs_equal(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (VertexId id : a.vertex_ids_sorted()) {
    const Vertex* va = a.find_vertex(id);
    const Vertex* vb = b.find_vertex(id);
    if (!vb) return false;
    if (va->properties != vb->properties) return false;
    auto out_a = va->out_edges, out_b = vb->out_edges;
    auto in_a = va->in_edges, in_b = vb->in_edges;
    std::sort(out_a.begin(), out_a.end());
    std::sort(out_b.begin(), out_b.end());
    std::sort(in_a.begin(), in_a.end());
    std::sort(in_b.begin(), in_b.end());
    if (out_a != out_b || in_a != in_b) return false;
  }
  for (EdgeId id : a.edge_ids_sorted()) {
    const Edge* ea = a.find_edge(id);
    const Edge* eb = b.find_edge(id);
    if (!eb) return false;
    if (ea->label != eb->label || ea->tail != eb->tail || ea->head != eb->head ||
        ea->properties != eb->properties)
      return false;
  }
  return true;
}

}  // namespace pgraph
