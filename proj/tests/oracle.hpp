#pragma once

// Brute-force references that share no code path with the library beyond
// the raw presentation data.

#include <functional>
#include <vector>

#include "gentle/presentation.hpp"
#include "gentle/string_module.hpp"

namespace oracle {

using gentle::ArrowId;
using gentle::Path;
using gentle::Presentation;
using gentle::VertexId;

/// Every nonzero path, found by depth-first extension along arrows. A nonzero
/// path of a finite-dimensional gentle algebra never repeats an arrow, so the
/// search stops at length |Q1|.
inline std::vector<Path> nonzero_paths(const Presentation& p) {
  const auto& q = p.quiver();
  std::vector<Path> out;
  std::function<void(Path&)> extend = [&](Path& path) {
    out.push_back(path);
    if (path.length() >= p.arrow_count()) return;
    VertexId end = path.is_trivial() ? path.base : q.target(path.arrows.back());
    for (ArrowId a = 0; a < p.arrow_count(); ++a) {
      if (q.source(a) != end) continue;
      if (!path.is_trivial() && p.is_relation(path.arrows.back(), a)) continue;
      path.arrows.push_back(a);
      extend(path);
      path.arrows.pop_back();
    }
  };
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    Path path{v, {}};
    extend(path);
  }
  return out;
}

inline std::size_t count_between(const Presentation& p, VertexId u, VertexId v) {
  std::size_t n = 0;
  for (const Path& path : oracle::nonzero_paths(p))
    if (path.base == u && path.target(p.quiver()) == v) ++n;
  return n;
}

/// e_vA with basis the nonzero paths from v and right concatenation as the
/// arrow action.
inline gentle::ActionModule projective_from_paths(const Presentation& p, VertexId v) {
  const auto& q = p.quiver();
  std::vector<Path> basis;
  for (const Path& path : oracle::nonzero_paths(p))
    if (path.base == v) basis.push_back(path);
  gentle::ActionModule m(p.arrow_count());
  for (const Path& path : basis) m.points.push_back(path.target(q));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (ArrowId a = 0; a < p.arrow_count(); ++a) {
      Path longer = basis[i];
      longer.arrows.push_back(a);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (basis[j] == longer) m.action[a][i] = j;
    }
  return m;
}

}  // namespace oracle
