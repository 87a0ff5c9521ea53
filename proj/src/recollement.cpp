#include "gentle/recollement.hpp"

#include <algorithm>

namespace gentle {

bool Idempotent::contains(VertexId v) const {
  return std::ranges::find(support, v) != support.end();
}

Idempotent epsilon_for(const Presentation& p, const FullRelationalCycle& c,
                       ArrowId t) {
  if (!c.contains(t))
    throw PresentationError("epsilon_for: arrow " + p.quiver().arrow(t).label +
                            " is not on the cycle");
  if (c.length() < 3)
    throw PresentationError("epsilon_for: cycle shorter than three");
  const Quiver& q = p.quiver();
  Idempotent eps;
  for (VertexId v : c.vertices(q))
    if (v != q.source(t) && v != q.target(t)) eps.support.push_back(v);
  std::ranges::sort(eps.support);
  return eps;
}

RecollementSite RecollementSite::build(const Presentation& source,
                                       Idempotent eps) {
  const Quiver& q = source.quiver();
  for (VertexId v : eps.support)
    if (v >= q.vertex_count())
      throw PresentationError("idempotent supported on an unknown vertex");
  std::ranges::sort(eps.support);
  auto last = std::ranges::unique(eps.support);
  eps.support.erase(last.begin(), last.end());

  RecollementSite s;
  s.source_ = source;
  s.vertex_to_quotient_.assign(q.vertex_count(), std::nullopt);
  s.arrow_to_quotient_.assign(q.arrow_count(), std::nullopt);

  std::vector<std::string> vertices;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (eps.contains(v)) continue;
    s.vertex_to_quotient_[v] = vertices.size();
    s.vertex_to_source_.push_back(v);
    vertices.push_back(q.vertex_label(v));
  }
  std::vector<RawArrow> arrows;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    if (eps.contains(q.source(a)) || eps.contains(q.target(a))) continue;
    s.arrow_to_quotient_[a] = arrows.size();
    s.arrow_to_source_.push_back(a);
    const Arrow& arr = q.arrow(a);
    arrows.push_back(
        {arr.label, q.vertex_label(arr.source), q.vertex_label(arr.target)});
  }
  std::vector<RawRelation> relations;
  for (auto [a, b] : source.relations())
    if (s.arrow_to_quotient_[a] && s.arrow_to_quotient_[b])
      relations.emplace_back(q.arrow(a).label, q.arrow(b).label);
  s.quotient_ = Presentation::build(vertices, arrows, relations);

  if (validate_gentle(source).ok() && !validate_gentle(s.quotient_).ok())
    throw PresentationError("quotient of a gentle presentation is not gentle");

  for (const Path& path : nonzero_paths(source))
    if (eps.contains(path.source(q)) && eps.contains(path.target(q)))
      s.corner_.push_back(path);
  s.eps_ = std::move(eps);
  return s;
}

RecollementSite build_site(const Presentation& p, const Idempotent& eps) {
  return RecollementSite::build(p, eps);
}

std::vector<IndexedSite> enumerate_sites(const Presentation& p) {
  std::vector<IndexedSite> out;
  auto cycles = full_relational_cycles(p);
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    if (cycles[k].length() < 3) continue;
    for (ArrowId t : cycles[k].arrows)
      out.push_back({k, t, build_site(p, epsilon_for(p, cycles[k], t))});
  }
  return out;
}

IndexedSite site_for(const Presentation& p, std::size_t cycle_index,
                     ArrowId t) {
  auto cycles = full_relational_cycles(p);
  if (cycle_index >= cycles.size())
    throw PresentationError("no full-relational cycle with index " +
                            std::to_string(cycle_index + 1));
  return {cycle_index, t,
          build_site(p, epsilon_for(p, cycles[cycle_index], t))};
}

StringModule to_quotient(const StringModule& m, const RecollementSite& site) {
  const Word& w = m.word();
  if (w.empty()) {
    auto v = site.to_quotient_vertex(w.base);
    if (!v) throw PresentationError("module lives at a removed vertex");
    return simple_module(site.quotient(), *v);
  }
  std::vector<Letter> letters;
  for (const Letter& l : w.letters) {
    auto a = site.to_quotient_arrow(l.arrow);
    if (!a) throw PresentationError("module uses a removed arrow");
    letters.push_back({*a, l.inverse});
  }
  return StringModule(site.quotient(), make_word(site.quotient(), letters));
}

std::vector<StringModule> tensor_quotient(const StringModule& m,
                                          const RecollementSite& site) {
  const Presentation& p = site.source();
  if (m.presentation_fingerprint() != p.fingerprint())
    throw PresentationError("tensor_quotient: module over another presentation");
  ActionModule act = action_from_word(p, m);
  std::vector<std::size_t> seeds;
  for (std::size_t i = 0; i < act.dimension(); ++i)
    if (site.idempotent().contains(act.points[i])) seeds.push_back(i);
  auto rest = quotient(act, submodule_generated(act, seeds));
  std::vector<StringModule> out;
  for (const StringModule& c : decompose(p, rest))
    out.push_back(to_quotient(c, site));
  return out;
}

std::optional<StringModule> image_module(const Path& q,
                                         const RecollementSite& site) {
  const Presentation& p = site.source();
  if (!is_nonzero(p, q)) throw PresentationError("image_module: zero path");
  for (VertexId v : q.vertices(p.quiver()))
    if (site.idempotent().contains(v)) return std::nullopt;
  Path bar{*site.to_quotient_vertex(q.base), {}};
  for (ArrowId a : q.arrows) bar.arrows.push_back(*site.to_quotient_arrow(a));
  return cyclic_path_module(site.quotient(), bar);
}

StringModule embed(const StringModule& m, const RecollementSite& site) {
  const Presentation& src = site.source();
  const Word& w = m.word();
  if (w.empty())
    return simple_module(src, site.to_source_vertex(w.base));
  std::vector<Letter> letters;
  for (const Letter& l : w.letters)
    letters.push_back({site.to_source_arrow(l.arrow), l.inverse});
  return StringModule(src, make_word(src, letters));
}

std::vector<StringModule> embed(const std::vector<StringModule>& ms,
                                const RecollementSite& site) {
  std::vector<StringModule> out;
  for (const StringModule& m : ms) out.push_back(embed(m, site));
  return out;
}

RestrictionDim res_dim(const StringModule& m, const Idempotent& eps) {
  RestrictionDim r;
  for (VertexId v : m.point_vertices())
    if (eps.contains(v)) {
      ++r.total;
      ++r.per_vertex[v];
    }
  return r;
}

std::vector<StringModule> annihilator_submodule(const Presentation& p,
                                                const StringModule& m,
                                                const Idempotent& eps) {
  ActionModule act = action_from_word(p, m);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < act.dimension(); ++i) {
    auto orbit = submodule_generated(act, {i});
    if (std::ranges::none_of(orbit, [&](std::size_t x) {
          return eps.contains(act.points[x]);
        }))
      kept.push_back(i);
  }
  return decompose(p, restrict_to(act, kept));
}

std::size_t corner_dimension(const RecollementSite& site) {
  return site.corner_basis().size();
}

}  // namespace gentle
