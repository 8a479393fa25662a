#pragma once

#include <iosfwd>
#include <string>

#include "pgraph/graph.hpp"

namespace pgraph {

// Line-oriented UTF-8 graph text format, one element per line:
//
//   V <id> [key=value]...
//   E <id> <label> <tail-id> <head-id> [key=value]...
//
// Values are bare integers/floats/true/false or double-quoted strings with
// backslash escapes (\" \\ \n \t \r). '#' starts a comment outside quotes.
// Duplicate keys on a line are an error. Edges must appear after both of
// their endpoint vertices.

/// Parses a graph; throws ParseError with a 1-based line/column on failure
/// (including semantic failures such as dangling endpoints or duplicate ids).
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

/// Canonical serialization: vertices then edges, each sorted by id, property
/// keys in key order. Reloading yields an equal graph.
void save_graph(const Graph& g, std::ostream& out);
void save_graph_file(const Graph& g, const std::string& path);

/// Deep equality on ids, labels, endpoints, and properties. Adjacency is
/// compared as sets, so insertion order does not matter.
bool graphs_equal(const Graph& a, const Graph& b);

}  // namespace pgraph
