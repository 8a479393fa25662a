#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pgraph/property.hpp"

namespace pgraph {

using VertexId = std::uint64_t;
using EdgeId = std::uint64_t;

struct Vertex {
  VertexId id = 0;
  PropertyMap properties;
  std::vector<EdgeId> out_edges;  // edges with tail == id, insertion order
  std::vector<EdgeId> in_edges;   // edges with head == id, insertion order

  const PropertyValue* property(std::string_view key) const {
    auto it = properties.find(key);
    return it == properties.end() ? nullptr : &it->second;
  }
};

struct Edge {
  EdgeId id = 0;
  std::string label;
  VertexId tail = 0;
  VertexId head = 0;
  PropertyMap properties;

  const PropertyValue* property(std::string_view key) const {
    auto it = properties.find(key);
    return it == properties.end() ? nullptr : &it->second;
  }
};

/// In-memory directed property multigraph. Every vertex keeps both adjacency
/// lists, so moving from an element to its neighbors costs only the local
/// degree, never a scan of the whole graph.
///
/// Construction-only mutation: elements are added, never removed. After
/// construction the graph supports any number of concurrent readers; writes
/// require exclusive access.
class Graph {
 public:
  /// Adds a vertex. Throws Error(DuplicateId) if the id is taken.
  Vertex& add_vertex(VertexId id, PropertyMap properties = {});

  /// Adds a directed labeled edge and links it into both endpoint adjacency
  /// lists. Throws Error(DuplicateId) or Error(DanglingEndpoint).
  /// Parallel edges and self-loops are permitted; the label must be nonempty.
  Edge& add_edge(EdgeId id, std::string label, VertexId tail, VertexId head,
                 PropertyMap properties = {});

  const Vertex* find_vertex(VertexId id) const;
  const Edge* find_edge(EdgeId id) const;

  /// Checked accessors; throw Error(DataError) if the element is absent.
  const Vertex& vertex(VertexId id) const;
  const Edge& edge(EdgeId id) const;

  std::span<const EdgeId> out_edges(VertexId id) const { return vertex(id).out_edges; }
  std::span<const EdgeId> in_edges(VertexId id) const { return vertex(id).in_edges; }
  VertexId tail(EdgeId id) const { return edge(id).tail; }
  VertexId head(EdgeId id) const { return edge(id).head; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Id lists in ascending order, for deterministic iteration.
  std::vector<VertexId> vertex_ids_sorted() const;
  std::vector<EdgeId> edge_ids_sorted() const;

  /// Structural self-check: bidirectional adjacency, degree sums, endpoint
  /// existence. Returns human-readable violations, empty when consistent.
  std::vector<std::string> check_consistency() const;

 private:
  std::unordered_map<VertexId, Vertex> vertices_;
  std::unordered_map<EdgeId, Edge> edges_;
};

}  // namespace pgraph
