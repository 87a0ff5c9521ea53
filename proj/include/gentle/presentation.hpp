#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gentle {

using VertexId = std::size_t;
using ArrowId = std::size_t;

/// Raised for structurally malformed input: duplicate labels, unknown
/// endpoints, non-composable or duplicate relations, unknown labels.
class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string label;
  VertexId source;
  VertexId target;
};

/// Finite quiver with opaque string labels. Vertices and arrows are indexed
/// in declaration order, and every iteration in the library follows it.
class Quiver {
 public:
  VertexId add_vertex(std::string label);
  ArrowId add_arrow(std::string label, std::string_view source,
                    std::string_view target);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  const std::string& vertex_label(VertexId v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  VertexId source(ArrowId a) const { return arrows_.at(a).source; }
  VertexId target(ArrowId a) const { return arrows_.at(a).target; }

  std::optional<VertexId> find_vertex(std::string_view label) const;
  std::optional<ArrowId> find_arrow(std::string_view label) const;
  VertexId vertex_id(std::string_view label) const;
  ArrowId arrow_id(std::string_view label) const;

  std::span<const ArrowId> out_arrows(VertexId v) const { return out_.at(v); }
  std::span<const ArrowId> in_arrows(VertexId v) const { return in_.at(v); }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, ArrowId> arrow_index_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
};

struct RawArrow {
  std::string label;
  std::string source;
  std::string target;
};

using RawRelation = std::pair<std::string, std::string>;
using Relation = std::pair<ArrowId, ArrowId>;

/// Bound quiver (Q, I) with I generated by composable paths of length two.
/// Construction enforces the structural invariants only; the gentle
/// conditions are checked separately by validate_gentle.
class Presentation {
 public:
  Presentation() = default;

  static Presentation build(std::span<const std::string> vertices,
                            std::span<const RawArrow> arrows,
                            std::span<const RawRelation> relations);

  const Quiver& quiver() const { return quiver_; }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }
  std::size_t arrow_count() const { return quiver_.arrow_count(); }

  /// Relations in declaration order.
  const std::vector<Relation>& relations() const { return relations_; }
  bool is_relation(ArrowId a, ArrowId b) const {
    return relation_set_.contains({a, b});
  }

  /// Content hash; modules remember it so that mixing presentations is caught.
  std::uint64_t fingerprint() const { return fingerprint_; }

  friend bool operator==(const Presentation& x, const Presentation& y);

 private:
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::set<Relation> relation_set_;
  std::uint64_t fingerprint_ = 0;
};

/// A path of the quiver: the trivial path at `base` when `arrows` is empty.
struct Path {
  VertexId base = 0;
  std::vector<ArrowId> arrows;

  static Path trivial(VertexId v) { return Path{v, {}}; }
  static Path of(const Quiver& q, std::vector<ArrowId> arrows);

  bool is_trivial() const { return arrows.empty(); }
  std::size_t length() const { return arrows.size(); }
  VertexId source(const Quiver& q) const;
  VertexId target(const Quiver& q) const;
  /// All vertices visited, endpoints included.
  std::vector<VertexId> vertices(const Quiver& q) const;

  friend bool operator==(const Path&, const Path&) = default;
};

bool is_composable(const Quiver& q, const Path& p);
/// Composable and free of consecutive relation pairs.
bool is_nonzero(const Presentation& p, const Path& path);

enum class GentleCondition {
  degree,                // at most two arrows in and out of each vertex
  nonzero_uniqueness,    // at most one continuation / predecessor outside I
  relation_uniqueness,   // at most one continuation / predecessor inside I
  length_two,            // I generated by paths of length two
  finite_dimensional,
};

std::string_view condition_name(GentleCondition c);

struct ConditionResult {
  GentleCondition condition;
  bool holds = true;
  std::vector<std::string> witnesses;
};

struct ValidationReport {
  std::vector<ConditionResult> conditions;

  bool ok() const;
  const ConditionResult& at(GentleCondition c) const;
  friend bool operator==(const ValidationReport&, const ValidationReport&);
};

ValidationReport validate_gentle(const Presentation& p);

std::optional<ArrowId> succ_nonzero(const Presentation& p, ArrowId a);
std::optional<ArrowId> succ_relation(const Presentation& p, ArrowId a);
std::optional<ArrowId> succ_nonzero(const Presentation& p, std::string_view a);
std::optional<ArrowId> succ_relation(const Presentation& p, std::string_view a);

/// The maximal chain a, succ(a), succ(succ(a)), ... Requires finite dimension.
std::vector<ArrowId> nonzero_chain(const Presentation& p, ArrowId a);

bool is_finite_dimensional(const Presentation& p);

/// Trivial paths in vertex order, then for each arrow the prefixes of its
/// maximal nonzero chain by increasing length.
std::vector<Path> nonzero_paths(const Presentation& p);
std::size_t algebra_dimension(const Presentation& p);

std::size_t component_count(const Presentation& p);
std::size_t betti_number(const Presentation& p);

std::size_t dim_between(const Presentation& p, VertexId u, VertexId v);
std::size_t dim_between(const Presentation& p, std::string_view u,
                        std::string_view v);

}  // namespace gentle
