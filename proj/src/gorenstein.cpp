#include "gentle/gorenstein.hpp"

#include <algorithm>

namespace gentle {

bool FullRelationalCycle::contains(ArrowId a) const {
  return std::ranges::find(arrows, a) != arrows.end();
}

std::size_t FullRelationalCycle::position(ArrowId a) const {
  auto it = std::ranges::find(arrows, a);
  if (it == arrows.end()) throw PresentationError("arrow is not on the cycle");
  return static_cast<std::size_t>(it - arrows.begin());
}

std::vector<VertexId> FullRelationalCycle::vertices(const Quiver& q) const {
  std::vector<VertexId> out;
  for (ArrowId a : arrows)
    if (std::ranges::find(out, q.source(a)) == out.end())
      out.push_back(q.source(a));
  return out;
}

std::vector<FullRelationalCycle> full_relational_cycles(const Presentation& p) {
  const std::size_t m = p.arrow_count();
  std::vector<std::optional<ArrowId>> next(m);
  for (ArrowId a = 0; a < m; ++a) next[a] = succ_relation(p, a);

  // Functional-graph cycle detection; colour 1 marks the current walk.
  std::vector<int> colour(m, 0);
  std::vector<FullRelationalCycle> out;
  for (ArrowId start = 0; start < m; ++start) {
    if (colour[start] != 0) continue;
    std::vector<ArrowId> walk;
    std::optional<ArrowId> cur = start;
    while (cur && colour[*cur] == 0) {
      colour[*cur] = 1;
      walk.push_back(*cur);
      cur = next[*cur];
    }
    if (cur && colour[*cur] == 1) {
      auto first = std::ranges::find(walk, *cur);
      std::vector<ArrowId> cycle(first, walk.end());
      std::ranges::rotate(cycle, std::ranges::min_element(cycle));
      out.push_back(FullRelationalCycle{std::move(cycle)});
    }
    for (ArrowId a : walk) colour[a] = 2;
  }
  std::ranges::sort(out, {}, [](const FullRelationalCycle& c) {
    return c.arrows.front();
  });
  return out;
}

AssumptionReport check_assumption(const Presentation& p) {
  AssumptionReport r;
  auto cycles = full_relational_cycles(p);
  for (std::size_t i = 0; i < cycles.size(); ++i)
    if (cycles[i].length() < 3) r.short_cycles.push_back(i);
  return r;
}

std::vector<GProjEntry> ind_gproj_nonproj(const Presentation& p) {
  std::vector<GProjEntry> out;
  for (const auto& c : full_relational_cycles(p))
    for (ArrowId a : c.arrows) out.push_back({a, arrow_module(p, a)});
  return out;
}

std::vector<StringModule> indecomposable_projectives(const Presentation& p) {
  std::vector<StringModule> out;
  for (VertexId v = 0; v < p.vertex_count(); ++v)
    out.push_back(projective_module(p, v));
  return out;
}

bool is_nonprojective_gprojective(const Presentation& p, const StringModule& m) {
  return std::ranges::any_of(ind_gproj_nonproj(p), [&](const GProjEntry& e) {
    return iso(e.module, m);
  });
}

bool is_gprojective(const Presentation& p, const StringModule& m) {
  for (VertexId v = 0; v < p.vertex_count(); ++v)
    if (iso(projective_module(p, v), m)) return true;
  return is_nonprojective_gprojective(p, m);
}

}  // namespace gentle
