#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gentle/presentation.hpp"

namespace gentle {

/// A direct arrow or its formal inverse. Ordered by (arrow index, direction)
/// with direct before inverse.
struct Letter {
  ArrowId arrow = 0;
  bool inverse = false;

  static Letter direct(ArrowId a) { return {a, false}; }
  static Letter inv(ArrowId a) { return {a, true}; }

  Letter inverted() const { return {arrow, !inverse}; }
  VertexId start(const Quiver& q) const {
    return inverse ? q.target(arrow) : q.source(arrow);
  }
  VertexId end(const Quiver& q) const {
    return inverse ? q.source(arrow) : q.target(arrow);
  }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class WordError : public PresentationError {
 public:
  using PresentationError::PresentationError;
};

/// Whether `second` may follow `first` inside a string.
bool valid_pair(const Presentation& p, Letter first, Letter second);

/// Reduced walk of letters. An empty word carries its vertex in `base`; a
/// nonempty one has base equal to the start of its first letter.
struct Word {
  VertexId base = 0;
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }
  /// Vertex of each basis point along the walk (length + 1 entries).
  std::vector<VertexId> points(const Quiver& q) const;

  friend auto operator<=>(const Word&, const Word&) = default;
};

/// First violated string condition, or nullopt when the letters form a word.
std::optional<std::string> word_violation(const Presentation& p,
                                          const std::vector<Letter>& letters);

Word make_word(const Presentation& p, std::vector<Letter> letters);
Word make_word(const Presentation& p, VertexId base);

Word reverse_invert(const Presentation& p, const Word& w);
/// The smaller of w and its reverse-inverse.
Word canonical(const Presentation& p, const Word& w);

using DimensionVector = std::map<VertexId, std::size_t>;

/// Indecomposable string module, held by its canonical word.
class StringModule {
 public:
  StringModule(const Presentation& p, const Word& w);

  const Word& word() const { return word_; }
  std::size_t dimension() const { return points_.size(); }
  const std::vector<VertexId>& point_vertices() const { return points_; }
  DimensionVector dimension_vector() const;
  std::uint64_t presentation_fingerprint() const { return fingerprint_; }

  friend bool operator==(const StringModule& x, const StringModule& y) {
    return x.fingerprint_ == y.fingerprint_ && x.word_ == y.word_;
  }

 private:
  Word word_;
  std::vector<VertexId> points_;
  std::uint64_t fingerprint_;
};

DimensionVector dimension_vector(const StringModule& m);

/// Word equality up to reversal. Throws when the modules live over different
/// presentations.
bool iso(const StringModule& m, const StringModule& n);

StringModule simple_module(const Presentation& p, VertexId v);
/// aA: uniserial, generated at t(a) by the chain continuing a.
StringModule arrow_module(const Presentation& p, ArrowId a);
/// e_vA: the two maximal nonzero paths leaving v glued at v.
StringModule projective_module(const Presentation& p, VertexId v);
/// qA for a nonzero path q; the trivial path gives the projective.
StringModule cyclic_path_module(const Presentation& p, const Path& q);

/// Basis points with a vertex each; `action[a]` is the partial right action
/// of arrow a, point -> point.
struct ActionModule {
  std::vector<VertexId> points;
  std::vector<std::map<std::size_t, std::size_t>> action;

  explicit ActionModule(std::size_t arrow_count = 0) : action(arrow_count) {}
  std::size_t dimension() const { return points.size(); }
};

/// Empty when the invariants hold: endpoints match arrows, each map is
/// injective, and composites along relations vanish.
std::optional<std::string> action_violation(const Presentation& p,
                                            const ActionModule& m);

ActionModule action_from_word(const Presentation& p, const StringModule& m);

/// Forward closure of the seeds under all arrow actions, sorted.
std::vector<std::size_t> submodule_generated(
    const ActionModule& m, const std::vector<std::size_t>& seeds);

/// M / N for an action-closed point set N.
ActionModule quotient(const ActionModule& m,
                      const std::vector<std::size_t>& closed);

/// The submodule spanned by an action-closed point set.
ActionModule restrict_to(const ActionModule& m,
                         const std::vector<std::size_t>& closed);

/// Connected components of the action graph as string modules, ordered by
/// their smallest point. Throws WordError on a component that is not a
/// string.
std::vector<StringModule> decompose(const Presentation& p,
                                    const ActionModule& m);

std::size_t total_dimension(const std::vector<StringModule>& ms);

/// "c2 d2", "-a1 b1", or "e(v)" for an empty word.
std::string word_string(const Presentation& p, const Word& w);
/// "{2,6,7}"; a multiplicity above one is written "v^n".
std::string dimension_vector_string(const Presentation& p,
                                    const DimensionVector& dv);

}  // namespace gentle
