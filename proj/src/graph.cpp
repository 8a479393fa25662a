#include "pgraph/graph.hpp"

#include <algorithm>

#include "pgraph/errors.hpp"

namespace pgraph {

Vertex& Graph::add_vertex(VertexId id, PropertyMap properties) {
  auto [it, inserted] = vertices_.try_emplace(id);
  if (!inserted) throw Error(Errc::DuplicateId, "vertex " + std::to_string(id) + " already exists");
  it->second.id = id;
  it->second.properties = std::move(properties);
  return it->second;
}

Edge& Graph::add_edge(EdgeId id, std::string label, VertexId tail, VertexId head,
                      PropertyMap properties) {
  if (label.empty()) throw Error(Errc::DataError, "edge label must be nonempty");
  auto tail_it = vertices_.find(tail);
  if (tail_it == vertices_.end())
    throw Error(Errc::DanglingEndpoint, "tail vertex " + std::to_string(tail) + " does not exist");
  auto head_it = vertices_.find(head);
  if (head_it == vertices_.end())
    throw Error(Errc::DanglingEndpoint, "head vertex " + std::to_string(head) + " does not exist");
  auto [it, inserted] = edges_.try_emplace(id);
  if (!inserted) throw Error(Errc::DuplicateId, "edge " + std::to_string(id) + " already exists");
  Edge& e = it->second;
  e.id = id;
  e.label = std::move(label);
  e.tail = tail;
  e.head = head;
  e.properties = std::move(properties);
  tail_it->second.out_edges.push_back(id);
  head_it->second.in_edges.push_back(id);
  return e;
}

const Vertex* Graph::find_vertex(VertexId id) const {
  auto it = vertices_.find(id);
  return it == vertices_.end() ? nullptr : &it->second;
}

const Edge* Graph::find_edge(EdgeId id) const {
  auto it = edges_.find(id);
  return it == edges_.end() ? nullptr : &it->second;
}

const Vertex& Graph::vertex(VertexId id) const {
  const Vertex* v = find_vertex(id);
  if (!v) throw Error(Errc::DataError, "unknown vertex " + std::to_string(id));
  return *v;
}

const Edge& Graph::edge(EdgeId id) const {
  const Edge* e = find_edge(id);
  if (!e) throw Error(Errc::DataError, "unknown edge " + std::to_string(id));
  return *e;
}

std::vector<VertexId> Graph::vertex_ids_sorted() const {
  std::vector<VertexId> ids;
  ids.reserve(vertices_.size());
  for (const auto& [id, v] : vertices_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<EdgeId> Graph::edge_ids_sorted() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const auto& [id, e] : edges_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::string> Graph::check_consistency() const {
  std::vector<std::string> issues;
  std::size_t out_total = 0, in_total = 0;
  for (const auto& [vid, v] : vertices_) {
    out_total += v.out_edges.size();
    in_total += v.in_edges.size();
    for (EdgeId eid : v.out_edges) {
      const Edge* e = find_edge(eid);
      if (!e)
        issues.push_back("vertex " + std::to_string(vid) + " lists unknown out-edge " +
                         std::to_string(eid));
      else if (e->tail != vid)
        issues.push_back("edge " + std::to_string(eid) + " in out-list of " + std::to_string(vid) +
                         " but tail is " + std::to_string(e->tail));
    }
    for (EdgeId eid : v.in_edges) {
      const Edge* e = find_edge(eid);
      if (!e)
        issues.push_back("vertex " + std::to_string(vid) + " lists unknown in-edge " +
                         std::to_string(eid));
      else if (e->head != vid)
        issues.push_back("edge " + std::to_string(eid) + " in in-list of " + std::to_string(vid) +
                         " but head is " + std::to_string(e->head));
    }
  }
  for (const auto& [eid, e] : edges_) {
    const Vertex* t = find_vertex(e.tail);
    const Vertex* h = find_vertex(e.head);
    if (!t || std::count(t->out_edges.begin(), t->out_edges.end(), eid) != 1)
      issues.push_back("edge " + std::to_string(eid) + " not listed exactly once by its tail");
    if (!h || std::count(h->in_edges.begin(), h->in_edges.end(), eid) != 1)
      issues.push_back("edge " + std::to_string(eid) + " not listed exactly once by its head");
  }
  if (out_total != edges_.size() || in_total != edges_.size())
    issues.push_back("adjacency degree sums (" + std::to_string(out_total) + " out, " +
                     std::to_string(in_total) + " in) do not both equal edge count " +
                     std::to_string(edges_.size()));
  return issues;
}

}  // namespace pgraph
