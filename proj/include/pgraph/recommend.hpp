#pragma once

#include <vector>

#include "pgraph/graph.hpp"
#include "pgraph/multiset.hpp"

namespace pgraph {

// Recommendation traversals over a graph of people, resources, and features
// connected by "likes" (person -> resource) and "feature" (resource ->
// feature) edges. Vertices carry a type property ("person" / "resource" /
// "feature"). Multiplicities count distinct connecting paths, so heavier
// overlap ranks higher.
//
// All functions are pure reads over the graph and freely concurrent.

/// Resources sharing at least one feature with `resource`, weighted by the
/// number of shared features; the starting resource itself is excluded.
/// Throws Error(KindMismatch) if the vertex is not typed "resource".
Multiset content_similar(const Graph& g, VertexId resource);

/// Resources at the head of the vertex's outgoing likes edges.
Multiset liked_resources(const Graph& g, VertexId person);

/// People who like resources that `person` also likes, weighted by the number
/// of co-liked resources; the person themself is excluded.
Multiset cofavored_people(const Graph& g, VertexId person);

/// Content-based ranking: each liked resource is expanded to the resources
/// that share features with it (excluding that liked resource), and the
/// contributions are combined. When `exclude_liked` is set, resources the
/// person already likes are removed before ranking.
std::vector<RankedElement> content_recommend(const Graph& g, VertexId person,
                                             bool exclude_liked = false);

/// Collaborative ranking: resources liked by co-favored people. A person
/// sharing n likes contributes each of their resources n times.
std::vector<RankedElement> collaborative_recommend(const Graph& g, VertexId person,
                                                   bool exclude_liked = false);

}  // namespace pgraph
