#include "pgraph/traversal.hpp"

#include "pgraph/errors.hpp"

namespace pgraph {

KindMask kind_to_mask(FrontierKind k) noexcept {
  switch (k) {
    case FrontierKind::Vertices: return kVerticesMask;
    case FrontierKind::Edges: return kEdgesMask;
    case FrontierKind::Values: return kValuesMask;
  }
  return 0;
}

namespace {

constexpr KindMask kElementsMask = kVerticesMask | kEdgesMask;

struct InputMaskVisitor {
  KindMask operator()(const OutEdgesStep&) const { return kVerticesMask; }
  KindMask operator()(const InEdgesStep&) const { return kVerticesMask; }
  KindMask operator()(const TailVerticesStep&) const { return kEdgesMask; }
  KindMask operator()(const HeadVerticesStep&) const { return kEdgesMask; }
  KindMask operator()(const PropsStep&) const { return kElementsMask; }
  KindMask operator()(const LabelFilterStep&) const { return kEdgesMask; }
  KindMask operator()(const PropFilterStep&) const { return kElementsMask; }
  KindMask operator()(const ElementFilterStep&) const { return kElementsMask; }
};

struct OutputMaskVisitor {
  KindMask inputs;
  KindMask operator()(const OutEdgesStep&) const { return kEdgesMask; }
  KindMask operator()(const InEdgesStep&) const { return kEdgesMask; }
  KindMask operator()(const TailVerticesStep&) const { return kVerticesMask; }
  KindMask operator()(const HeadVerticesStep&) const { return kVerticesMask; }
  KindMask operator()(const PropsStep&) const { return kValuesMask; }
  // Filters preserve the kind that flows through them.
  KindMask operator()(const LabelFilterStep&) const { return inputs & kEdgesMask; }
  KindMask operator()(const PropFilterStep&) const { return inputs & kElementsMask; }
  KindMask operator()(const ElementFilterStep&) const { return inputs & kElementsMask; }
};

const char* step_name(const Step& s) {
  struct Visitor {
    const char* operator()(const OutEdgesStep&) const { return "outE"; }
    const char* operator()(const InEdgesStep&) const { return "inE"; }
    const char* operator()(const TailVerticesStep&) const { return "outV"; }
    const char* operator()(const HeadVerticesStep&) const { return "inV"; }
    const char* operator()(const PropsStep&) const { return "props"; }
    const char* operator()(const LabelFilterStep&) const { return "labelFilter"; }
    const char* operator()(const PropFilterStep&) const { return "propFilter"; }
    const char* operator()(const ElementFilterStep&) const { return "elemFilter"; }
  };
  return std::visit(Visitor{}, s);
}

void require_kind(const Step& s, const Multiset& frontier) {
  if ((kind_to_mask(frontier.kind()) & step_input_mask(s)) == 0) {
    throw Error(Errc::KindMismatch, std::string(step_name(s)) + " cannot consume a " +
                                        frontier_kind_name(frontier.kind()) + " frontier");
  }
}

}  // namespace

KindMask step_input_mask(const Step& s) noexcept { return std::visit(InputMaskVisitor{}, s); }

KindMask step_output_mask(const Step& s, KindMask inputs) noexcept {
  return std::visit(OutputMaskVisitor{inputs}, s);
}

Traversal Traversal::compose(std::vector<Step> steps) {
  // Validate statically: comparator/value compatibility and a non-empty kind
  // flow through the whole chain.
  KindMask flowing = kAnyMask;
  KindMask input_mask = kAnyMask;
  bool first = true;
  for (const Step& s : steps) {
    if (const auto* pf = std::get_if<PropFilterStep>(&s)) {
      if (pf->key.empty()) throw Error(Errc::DataError, "property filter key must be nonempty");
      if (pf->cmp != Comparator::Eq && pf->cmp != Comparator::Ne &&
          value_class(pf->value) != ValueClass::Numeric) {
        throw Error(Errc::TypeMismatch, "order comparator requires a numeric filter value");
      }
    }
    if (const auto* lf = std::get_if<LabelFilterStep>(&s)) {
      if (lf->label.empty()) throw Error(Errc::DataError, "label filter label must be nonempty");
    }
    KindMask accepted = flowing & step_input_mask(s);
    if (accepted == 0) {
      throw Error(Errc::KindMismatch,
                  std::string("step ") + step_name(s) + " cannot follow the preceding steps");
    }
    if (first) {
      input_mask = step_input_mask(s);
      first = false;
    }
    flowing = step_output_mask(s, accepted);
  }
  Traversal t;
  t.steps_ = std::move(steps);
  t.input_mask_ = input_mask;
  return t;
}

Traversal Traversal::then(const Traversal& next) const {
  std::vector<Step> combined = steps_;
  combined.insert(combined.end(), next.steps_.begin(), next.steps_.end());
  return compose(std::move(combined));
}

KindMask Traversal::output_mask_for(FrontierKind start) const {
  KindMask flowing = kind_to_mask(start);
  for (const Step& s : steps_) {
    KindMask accepted = flowing & step_input_mask(s);
    if (accepted == 0) {
      throw Error(Errc::KindMismatch, std::string("step ") + step_name(s) +
                                          " cannot consume the current frontier kind");
    }
    flowing = step_output_mask(s, accepted);
  }
  return flowing;
}

namespace {

Multiset expand_to_edges(const Graph& g, const Multiset& frontier, bool outgoing,
                         EvalObserver* obs) {
  Multiset out(FrontierKind::Edges);
  for (const auto& [vid, mult] : frontier.id_entries()) {
    const Vertex& v = g.vertex(vid);
    if (obs) obs->on_touch(FrontierKind::Vertices, vid);
    const auto& list = outgoing ? v.out_edges : v.in_edges;
    for (EdgeId eid : list) out.add(eid, mult);
  }
  return out;
}

Multiset expand_to_vertices(const Graph& g, const Multiset& frontier, bool head, EvalObserver* obs) {
  Multiset out(FrontierKind::Vertices);
  for (const auto& [eid, mult] : frontier.id_entries()) {
    const Edge& e = g.edge(eid);
    if (obs) obs->on_touch(FrontierKind::Edges, eid);
    out.add(head ? e.head : e.tail, mult);
  }
  return out;
}

Multiset project_props(const Graph& g, const Multiset& frontier, std::string_view key,
                       EvalObserver* obs) {
  Multiset out(FrontierKind::Values);
  for (const auto& [id, mult] : frontier.id_entries()) {
    const PropertyValue* value = nullptr;
    if (frontier.kind() == FrontierKind::Vertices) {
      value = g.vertex(id).property(key);
    } else {
      value = g.edge(id).property(key);
    }
    if (obs) obs->on_touch(frontier.kind(), id);
    if (value) out.add(*value, mult);
  }
  return out;
}

Multiset sieve_label(const Graph& g, const Multiset& frontier, std::string_view label, bool allow,
                     EvalObserver* obs) {
  Multiset out(FrontierKind::Edges);
  for (const auto& [eid, mult] : frontier.id_entries()) {
    const Edge& e = g.edge(eid);
    if (obs) {
      obs->on_touch(FrontierKind::Edges, eid);
      obs->on_label_comparison(eid);
    }
    if ((e.label == label) == allow) out.add(eid, mult);
  }
  return out;
}

Multiset sieve_property(const Graph& g, const Multiset& frontier, std::string_view key,
                        Comparator cmp, const PropertyValue& value, bool allow, EvalObserver* obs) {
  Multiset out(frontier.kind());
  for (const auto& [id, mult] : frontier.id_entries()) {
    const PropertyValue* stored = frontier.kind() == FrontierKind::Vertices
                                      ? g.vertex(id).property(key)
                                      : g.edge(id).property(key);
    if (obs) obs->on_touch(frontier.kind(), id);
    // An absent key never satisfies the predicate: dropped by allow, kept by
    // deny, with no comparison performed.
    bool keep;
    if (!stored) {
      keep = !allow;
    } else {
      if (obs) obs->on_property_comparison(frontier.kind(), id, key);
      keep = apply_comparator(*stored, cmp, value) == allow;
    }
    if (keep) out.add(id, mult);
  }
  return out;
}

Multiset sieve_element(const Multiset& frontier, FrontierKind kind, std::uint64_t id, bool allow) {
  Multiset out(frontier.kind());
  for (const auto& [eid, mult] : frontier.id_entries()) {
    bool is_target = frontier.kind() == kind && eid == id;
    if (is_target == allow) out.add(eid, mult);
  }
  return out;
}

struct ApplyVisitor {
  const Graph& g;
  const Multiset& frontier;
  EvalObserver* obs;

  Multiset operator()(const OutEdgesStep&) const { return expand_to_edges(g, frontier, true, obs); }
  Multiset operator()(const InEdgesStep&) const { return expand_to_edges(g, frontier, false, obs); }
  Multiset operator()(const TailVerticesStep&) const {
    return expand_to_vertices(g, frontier, false, obs);
  }
  Multiset operator()(const HeadVerticesStep&) const {
    return expand_to_vertices(g, frontier, true, obs);
  }
  Multiset operator()(const PropsStep& s) const { return project_props(g, frontier, s.key, obs); }
  Multiset operator()(const LabelFilterStep& s) const {
    return sieve_label(g, frontier, s.label, s.allow, obs);
  }
  Multiset operator()(const PropFilterStep& s) const {
    return sieve_property(g, frontier, s.key, s.cmp, s.value, s.allow, obs);
  }
  Multiset operator()(const ElementFilterStep& s) const {
    return sieve_element(frontier, s.kind, s.id, s.allow);
  }
};

}  // namespace

Multiset apply_step(const Graph& g, const Step& s, const Multiset& frontier, EvalObserver* obs) {
  require_kind(s, frontier);
  return std::visit(ApplyVisitor{g, frontier, obs}, s);
}

Multiset evaluate(const Graph& g, const Traversal& t, const Multiset& start, EvalObserver* obs) {
  Multiset frontier = start;
  for (const Step& s : t.steps()) frontier = apply_step(g, s, frontier, obs);
  return frontier;
}

Multiset iterate(const Graph& g, const Traversal& t, const Multiset& start, std::size_t n,
                 EvalObserver* obs) {
  if (start.kind() != FrontierKind::Vertices ||
      (!t.empty() && t.output_mask_for(FrontierKind::Vertices) != kVerticesMask)) {
    throw Error(Errc::KindMismatch, "iterate requires a vertices -> vertices traversal");
  }
  Multiset frontier = start;
  for (std::size_t i = 0; i < n; ++i) frontier = evaluate(g, t, frontier, obs);
  return frontier;
}

Multiset step_e_out(const Graph& g, const Multiset& vertices, EvalObserver* obs) {
  return apply_step(g, OutEdgesStep{}, vertices, obs);
}
Multiset step_e_in(const Graph& g, const Multiset& vertices, EvalObserver* obs) {
  return apply_step(g, InEdgesStep{}, vertices, obs);
}
Multiset step_v_out(const Graph& g, const Multiset& edges, EvalObserver* obs) {
  return apply_step(g, TailVerticesStep{}, edges, obs);
}
Multiset step_v_in(const Graph& g, const Multiset& edges, EvalObserver* obs) {
  return apply_step(g, HeadVerticesStep{}, edges, obs);
}
Multiset step_props(const Graph& g, const Multiset& elements, std::string_view key,
                    EvalObserver* obs) {
  return apply_step(g, PropsStep{std::string(key)}, elements, obs);
}
Multiset filter_label(const Graph& g, const Multiset& edges, std::string_view label, bool allow,
                      EvalObserver* obs) {
  return apply_step(g, LabelFilterStep{std::string(label), allow}, edges, obs);
}
Multiset filter_property(const Graph& g, const Multiset& elements, std::string_view key,
                         Comparator cmp, const PropertyValue& value, bool allow, EvalObserver* obs) {
  return apply_step(g, PropFilterStep{std::string(key), cmp, value, allow}, elements, obs);
}
Multiset filter_element(const Graph& g, const Multiset& elements, FrontierKind kind,
                        std::uint64_t id, bool allow, EvalObserver* obs) {
  return apply_step(g, ElementFilterStep{kind, id, allow}, elements, obs);
}

}  // namespace pgraph
