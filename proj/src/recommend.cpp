#include "pgraph/recommend.hpp"

#include "pgraph/errors.hpp"
#include "pgraph/traversal.hpp"

namespace pgraph {

namespace {

using namespace steps;

// Out along `label` to heads, back in along `label` to tails, minus the
// element itself: the shared-neighbor expansion used by both similarity
// directions.
Multiset shared_forward_expansion(const Graph& g, VertexId start, const std::string& label) {
  Traversal t = Traversal::compose({
      out_e(), allow_label(label), in_v(),   // to the shared targets
      in_e(), allow_label(label), out_v(),   // back to everything pointing at them
      deny_element(FrontierKind::Vertices, start),
  });
  return evaluate(g, t, Multiset::vertices({start}));
}

Multiset likes_heads(const Graph& g, const Multiset& people) {
  Traversal t = Traversal::compose({out_e(), allow_label("likes"), in_v()});
  return evaluate(g, t, people);
}

bool has_type(const Graph& g, VertexId id, std::string_view type) {
  const PropertyValue* v = g.vertex(id).property("type");
  return v && std::holds_alternative<std::string>(*v) && std::get<std::string>(*v) == type;
}

}  // namespace

Multiset content_similar(const Graph& g, VertexId resource) {
  if (!has_type(g, resource, "resource")) {
    throw Error(Errc::KindMismatch,
                "vertex " + std::to_string(resource) + " is not typed \"resource\"");
  }
  return shared_forward_expansion(g, resource, "feature");
}

Multiset liked_resources(const Graph& g, VertexId person) {
  return likes_heads(g, Multiset::vertices({person}));
}

Multiset cofavored_people(const Graph& g, VertexId person) {
  return shared_forward_expansion(g, person, "likes");
}

std::vector<RankedElement> content_recommend(const Graph& g, VertexId person, bool exclude_liked) {
  Multiset liked = liked_resources(g, person);
  // The self-exclusion in the similarity expansion binds to each liked
  // resource, so expand per entry and combine by multiset union.
  Multiset combined(FrontierKind::Vertices);
  for (const auto& [resource, mult] : liked.id_entries()) {
    combined.merge(shared_forward_expansion(g, resource, "feature").scaled(mult));
  }
  if (exclude_liked) {
    for (const auto& [resource, mult] : liked.id_entries()) {
      combined = filter_element(g, combined, FrontierKind::Vertices, resource, false);
    }
  }
  return rank_elements(combined);
}

std::vector<RankedElement> collaborative_recommend(const Graph& g, VertexId person,
                                                   bool exclude_liked) {
  Multiset candidates = likes_heads(g, cofavored_people(g, person));
  if (exclude_liked) {
    for (const auto& [resource, mult] : liked_resources(g, person).id_entries()) {
      candidates = filter_element(g, candidates, FrontierKind::Vertices, resource, false);
    }
  }
  return rank_elements(candidates);
}

}  // namespace pgraph
