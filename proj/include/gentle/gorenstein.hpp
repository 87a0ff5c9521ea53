#pragma once

#include <vector>

#include "gentle/presentation.hpp"
#include "gentle/string_module.hpp"

namespace gentle {

/// Oriented cycle a_1 ... a_l with every cyclically consecutive product in I,
/// rotated so that its least arrow comes first.
struct FullRelationalCycle {
  std::vector<ArrowId> arrows;

  std::size_t length() const { return arrows.size(); }
  bool contains(ArrowId a) const;
  /// Index of `a` on the cycle; throws if absent.
  std::size_t position(ArrowId a) const;
  /// Distinct vertices in cycle order, starting at s(a_1).
  std::vector<VertexId> vertices(const Quiver& q) const;

  friend bool operator==(const FullRelationalCycle&,
                         const FullRelationalCycle&) = default;
};

/// Cycles of the partial map a -> succ_relation(a), ordered by least arrow.
std::vector<FullRelationalCycle> full_relational_cycles(const Presentation& p);

struct AssumptionReport {
  /// Indices (into full_relational_cycles) of cycles shorter than three.
  std::vector<std::size_t> short_cycles;
  bool ok() const { return short_cycles.empty(); }
};

AssumptionReport check_assumption(const Presentation& p);

struct GProjEntry {
  ArrowId arrow;
  StringModule module;
};

/// One entry (a, aA) per arrow of each full-relational cycle, in cycle
/// order: the non-projective indecomposable Gorenstein-projectives.
std::vector<GProjEntry> ind_gproj_nonproj(const Presentation& p);

std::vector<StringModule> indecomposable_projectives(const Presentation& p);

bool is_gprojective(const Presentation& p, const StringModule& m);

/// True when m is isomorphic to some aA with a on a full-relational cycle.
bool is_nonprojective_gprojective(const Presentation& p, const StringModule& m);

}  // namespace gentle
