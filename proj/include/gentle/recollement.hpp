#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gentle/gorenstein.hpp"
#include "gentle/presentation.hpp"
#include "gentle/string_module.hpp"

namespace gentle {

/// Sum of the vertex idempotents over `support` (declaration order).
struct Idempotent {
  std::vector<VertexId> support;

  bool contains(VertexId v) const;
  friend bool operator==(const Idempotent&, const Idempotent&) = default;
};

/// Idempotent of the site (C, a_t): the vertices of C other than s(a_t) and
/// t(a_t). Throws if a_t is not on C or C is shorter than three.
Idempotent epsilon_for(const Presentation& p, const FullRelationalCycle& c,
                       ArrowId t);

/// Data of the recollement induced by an idempotent e of A = kQ/I:
/// the quotient A/AeA as a bound quiver on the surviving vertices, and the
/// path basis of the corner algebra eAe.
class RecollementSite {
 public:
  static RecollementSite build(const Presentation& source, Idempotent eps);

  const Presentation& source() const { return source_; }
  const Presentation& quotient() const { return quotient_; }
  const Idempotent& idempotent() const { return eps_; }
  /// Nonzero source paths with both endpoints in the support.
  const std::vector<Path>& corner_basis() const { return corner_; }

  std::optional<VertexId> to_quotient_vertex(VertexId v) const {
    return vertex_to_quotient_.at(v);
  }
  std::optional<ArrowId> to_quotient_arrow(ArrowId a) const {
    return arrow_to_quotient_.at(a);
  }
  VertexId to_source_vertex(VertexId v) const { return vertex_to_source_.at(v); }
  ArrowId to_source_arrow(ArrowId a) const { return arrow_to_source_.at(a); }

 private:
  Presentation source_;
  Presentation quotient_;
  Idempotent eps_;
  std::vector<std::optional<VertexId>> vertex_to_quotient_;
  std::vector<std::optional<ArrowId>> arrow_to_quotient_;
  std::vector<VertexId> vertex_to_source_;
  std::vector<ArrowId> arrow_to_source_;
  std::vector<Path> corner_;
};

RecollementSite build_site(const Presentation& p, const Idempotent& eps);

/// A site of GR(A): cycle index into full_relational_cycles, the chosen
/// arrow, and the built site.
struct IndexedSite {
  std::size_t cycle_index;
  ArrowId t;
  RecollementSite site;
};

/// All sites (C, a_t) with C of length at least three, in cycle order then
/// arrow order along the cycle.
std::vector<IndexedSite> enumerate_sites(const Presentation& p);

/// Site for the k-th (0-based) full-relational cycle and arrow t.
IndexedSite site_for(const Presentation& p, std::size_t cycle_index, ArrowId t);

/// - (x)_A A/AeA computed as M / MeA. The empty list is the zero module.
std::vector<StringModule> tensor_quotient(const StringModule& m,
                                          const RecollementSite& site);

/// The image of qA read inside the quotient: zero when q meets the support,
/// otherwise q-bar times A-bar.
std::optional<StringModule> image_module(const Path& q,
                                         const RecollementSite& site);

/// Regards a quotient module as a source module.
StringModule embed(const StringModule& m, const RecollementSite& site);
std::vector<StringModule> embed(const std::vector<StringModule>& ms,
                                const RecollementSite& site);

/// Module over the source transported to the quotient; throws if it uses a
/// removed arrow or vertex.
StringModule to_quotient(const StringModule& m, const RecollementSite& site);

struct RestrictionDim {
  std::size_t total = 0;
  std::map<VertexId, std::size_t> per_vertex;
};

/// Dimension data of Me.
RestrictionDim res_dim(const StringModule& m, const Idempotent& eps);

/// Largest submodule of M annihilated by AeA, decomposed.
std::vector<StringModule> annihilator_submodule(const Presentation& p,
                                                const StringModule& m,
                                                const Idempotent& eps);

std::size_t corner_dimension(const RecollementSite& site);

}  // namespace gentle
