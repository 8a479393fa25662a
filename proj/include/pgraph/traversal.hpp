#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pgraph/graph.hpp"
#include "pgraph/multiset.hpp"
#include "pgraph/property.hpp"

namespace pgraph {

// Single-step traversal operations and filters. A traversal is an ordered
// list of these, applied first-to-last over multiset frontiers.

struct OutEdgesStep {};                 // vertices -> their outgoing edges
struct InEdgesStep {};                  // vertices -> their incoming edges
struct TailVerticesStep {};             // edges -> tail vertices
struct HeadVerticesStep {};             // edges -> head vertices
struct PropsStep {                      // elements -> property values for key
  std::string key;
};
struct LabelFilterStep {                // edges with (or without) a label
  std::string label;
  bool allow = true;
};
struct PropFilterStep {                 // elements whose key satisfies cmp value
  std::string key;
  Comparator cmp = Comparator::Eq;
  PropertyValue value;
  bool allow = true;
};
struct ElementFilterStep {              // occurrences of one specific element
  FrontierKind kind = FrontierKind::Vertices;
  std::uint64_t id = 0;
  bool allow = true;
};

using Step = std::variant<OutEdgesStep, InEdgesStep, TailVerticesStep, HeadVerticesStep, PropsStep,
                          LabelFilterStep, PropFilterStep, ElementFilterStep>;

namespace steps {
inline Step out_e() { return OutEdgesStep{}; }
inline Step in_e() { return InEdgesStep{}; }
inline Step out_v() { return TailVerticesStep{}; }
inline Step in_v() { return HeadVerticesStep{}; }
inline Step props(std::string key) { return PropsStep{std::move(key)}; }
inline Step allow_label(std::string label) { return LabelFilterStep{std::move(label), true}; }
inline Step deny_label(std::string label) { return LabelFilterStep{std::move(label), false}; }
inline Step allow_prop(std::string key, Comparator cmp, PropertyValue value) {
  return PropFilterStep{std::move(key), cmp, std::move(value), true};
}
inline Step deny_prop(std::string key, Comparator cmp, PropertyValue value) {
  return PropFilterStep{std::move(key), cmp, std::move(value), false};
}
inline Step allow_element(FrontierKind kind, std::uint64_t id) {
  return ElementFilterStep{kind, id, true};
}
inline Step deny_element(FrontierKind kind, std::uint64_t id) {
  return ElementFilterStep{kind, id, false};
}
}  // namespace steps

/// Bitmask over FrontierKind, used for static kind checking of compositions.
using KindMask = unsigned;
inline constexpr KindMask kVerticesMask = 1u << 0;
inline constexpr KindMask kEdgesMask = 1u << 1;
inline constexpr KindMask kValuesMask = 1u << 2;
inline constexpr KindMask kAnyMask = kVerticesMask | kEdgesMask | kValuesMask;

KindMask kind_to_mask(FrontierKind k) noexcept;

/// Input kinds a step accepts.
KindMask step_input_mask(const Step& s) noexcept;
/// Output kinds a step can produce given a set of input kinds.
KindMask step_output_mask(const Step& s, KindMask inputs) noexcept;

/// An immutable, reusable composition of steps. The empty traversal is the
/// identity. Construction rejects chains whose kinds cannot line up.
class Traversal {
 public:
  Traversal() = default;

  /// Validates kind compatibility; throws Error(KindMismatch) otherwise.
  static Traversal compose(std::vector<Step> steps);

  /// Concatenation: this traversal followed by `next` (revalidated).
  Traversal then(const Traversal& next) const;

  const std::vector<Step>& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }

  /// Kinds accepted as the starting frontier.
  KindMask input_mask() const noexcept { return input_mask_; }

  /// Output kinds when started from `start`; throws Error(KindMismatch) if the
  /// start kind is not accepted.
  KindMask output_mask_for(FrontierKind start) const;

 private:
  std::vector<Step> steps_;
  KindMask input_mask_ = kAnyMask;
};

/// Instrumentation hook for traversal evaluation. Touches are graph-element
/// dereferences; comparisons are label or property predicate evaluations.
/// Counting is per distinct multiset entry, not per occurrence.
class EvalObserver {
 public:
  virtual ~EvalObserver() = default;
  virtual void on_touch(FrontierKind /*kind*/, std::uint64_t /*id*/) {}
  virtual void on_label_comparison(std::uint64_t /*edge_id*/) {}
  virtual void on_property_comparison(FrontierKind /*kind*/, std::uint64_t /*id*/,
                                      std::string_view /*key*/) {}
};

/// Basic counting observer.
struct EvalCounters final : EvalObserver {
  std::uint64_t elements_touched = 0;
  std::uint64_t label_comparisons = 0;
  std::uint64_t property_comparisons = 0;

  void on_touch(FrontierKind, std::uint64_t) override { ++elements_touched; }
  void on_label_comparison(std::uint64_t) override { ++label_comparisons; }
  void on_property_comparison(FrontierKind, std::uint64_t, std::string_view) override {
    ++property_comparisons;
  }
};

/// Applies one step to a frontier. Throws Error(KindMismatch) when the frontier
/// kind is not accepted by the step.
Multiset apply_step(const Graph& g, const Step& s, const Multiset& frontier,
                    EvalObserver* observer = nullptr);

/// Applies all steps in order. Pure with respect to the graph; safe to run
/// concurrently with other evaluations over the same graph.
Multiset evaluate(const Graph& g, const Traversal& t, const Multiset& start,
                  EvalObserver* observer = nullptr);

/// Applies a vertices->vertices traversal n times in sequence.
Multiset iterate(const Graph& g, const Traversal& t, const Multiset& start, std::size_t n,
                 EvalObserver* observer = nullptr);

// Spec-level single-step entry points.
Multiset step_e_out(const Graph& g, const Multiset& vertices, EvalObserver* observer = nullptr);
Multiset step_e_in(const Graph& g, const Multiset& vertices, EvalObserver* observer = nullptr);
Multiset step_v_out(const Graph& g, const Multiset& edges, EvalObserver* observer = nullptr);
Multiset step_v_in(const Graph& g, const Multiset& edges, EvalObserver* observer = nullptr);
Multiset step_props(const Graph& g, const Multiset& elements, std::string_view key,
                    EvalObserver* observer = nullptr);
Multiset filter_label(const Graph& g, const Multiset& edges, std::string_view label, bool allow,
                      EvalObserver* observer = nullptr);
Multiset filter_property(const Graph& g, const Multiset& elements, std::string_view key,
                         Comparator cmp, const PropertyValue& value, bool allow,
                         EvalObserver* observer = nullptr);
Multiset filter_element(const Graph& g, const Multiset& elements, FrontierKind kind,
                        std::uint64_t id, bool allow, EvalObserver* observer = nullptr);

}  // namespace pgraph
