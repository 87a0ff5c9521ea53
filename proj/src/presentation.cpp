#include "gentle/presentation.hpp"

#include <algorithm>
#include <numeric>

namespace gentle {

namespace {

class Fnv1a {
 public:
  void add(std::string_view s) {
    for (unsigned char c : s) mix(c);
    mix(0xff);
  }
  void add(std::size_t n) {
    for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(n >> (8 * i)));
  }
  std::uint64_t value() const { return h_; }

 private:
  void mix(unsigned char c) {
    h_ ^= c;
    h_ *= 0x100000001b3ULL;
  }
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string pair_label(const Quiver& q, ArrowId a, ArrowId b) {
  return q.arrow(a).label + q.arrow(b).label;
}

}  // namespace

VertexId Quiver::add_vertex(std::string label) {
  if (vertex_index_.contains(label))
    throw PresentationError("duplicate vertex '" + label + "'");
  VertexId id = vertices_.size();
  vertex_index_.emplace(label, id);
  vertices_.push_back(std::move(label));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

ArrowId Quiver::add_arrow(std::string label, std::string_view source,
                          std::string_view target) {
  if (arrow_index_.contains(label))
    throw PresentationError("duplicate arrow '" + label + "'");
  auto s = find_vertex(source);
  auto t = find_vertex(target);
  if (!s)
    throw PresentationError("arrow '" + label + "': unknown source vertex '" +
                            std::string(source) + "'");
  if (!t)
    throw PresentationError("arrow '" + label + "': unknown target vertex '" +
                            std::string(target) + "'");
  ArrowId id = arrows_.size();
  arrow_index_.emplace(label, id);
  arrows_.push_back(Arrow{std::move(label), *s, *t});
  out_[*s].push_back(id);
  in_[*t].push_back(id);
  return id;
}

std::optional<VertexId> Quiver::find_vertex(std::string_view label) const {
  auto it = vertex_index_.find(std::string(label));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view label) const {
  auto it = arrow_index_.find(std::string(label));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Quiver::vertex_id(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw PresentationError("unknown vertex '" + std::string(label) + "'");
}

ArrowId Quiver::arrow_id(std::string_view label) const {
  if (auto a = find_arrow(label)) return *a;
  throw PresentationError("unknown arrow '" + std::string(label) + "'");
}

Presentation Presentation::build(std::span<const std::string> vertices,
                                 std::span<const RawArrow> arrows,
                                 std::span<const RawRelation> relations) {
  Presentation p;
  Fnv1a h;
  for (const auto& v : vertices) {
    p.quiver_.add_vertex(v);
    h.add(v);
  }
  h.add(std::size_t{0});
  for (const auto& a : arrows) {
    p.quiver_.add_arrow(a.label, a.source, a.target);
    h.add(a.label);
    h.add(a.source);
    h.add(a.target);
  }
  h.add(std::size_t{1});
  for (const auto& [first, second] : relations) {
    ArrowId a = p.quiver_.arrow_id(first);
    ArrowId b = p.quiver_.arrow_id(second);
    if (p.quiver_.target(a) != p.quiver_.source(b))
      throw PresentationError("relation (" + first + ", " + second +
                              ") is not composable");
    if (!p.relation_set_.insert({a, b}).second)
      throw PresentationError("duplicate relation (" + first + ", " + second +
                              ")");
    p.relations_.emplace_back(a, b);
    h.add(first);
    h.add(second);
  }
  p.fingerprint_ = h.value();
  return p;
}

bool operator==(const Presentation& x, const Presentation& y) {
  if (x.fingerprint_ != y.fingerprint_) return false;
  if (x.vertex_count() != y.vertex_count() ||
      x.arrow_count() != y.arrow_count() || x.relations_ != y.relations_)
    return false;
  for (VertexId v = 0; v < x.vertex_count(); ++v)
    if (x.quiver_.vertex_label(v) != y.quiver_.vertex_label(v)) return false;
  for (ArrowId a = 0; a < x.arrow_count(); ++a) {
    const auto& l = x.quiver_.arrow(a);
    const auto& r = y.quiver_.arrow(a);
    if (l.label != r.label || l.source != r.source || l.target != r.target)
      return false;
  }
  return true;
}

Path Path::of(const Quiver& q, std::vector<ArrowId> arrows) {
  if (arrows.empty()) throw PresentationError("Path::of needs an arrow");
  Path p{q.source(arrows.front()), std::move(arrows)};
  if (!is_composable(q, p)) throw PresentationError("path is not composable");
  return p;
}

VertexId Path::source(const Quiver& q) const {
  return arrows.empty() ? base : q.source(arrows.front());
}

VertexId Path::target(const Quiver& q) const {
  return arrows.empty() ? base : q.target(arrows.back());
}

std::vector<VertexId> Path::vertices(const Quiver& q) const {
  std::vector<VertexId> out{source(q)};
  for (ArrowId a : arrows) out.push_back(q.target(a));
  return out;
}

bool is_composable(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return p.base < q.vertex_count();
  for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (q.target(p.arrows[i]) != q.source(p.arrows[i + 1])) return false;
  return true;
}

bool is_nonzero(const Presentation& p, const Path& path) {
  if (!is_composable(p.quiver(), path)) return false;
  for (std::size_t i = 0; i + 1 < path.arrows.size(); ++i)
    if (p.is_relation(path.arrows[i], path.arrows[i + 1])) return false;
  return true;
}

std::string_view condition_name(GentleCondition c) {
  switch (c) {
    case GentleCondition::degree: return "degree";
    case GentleCondition::nonzero_uniqueness: return "nonzero-uniqueness";
    case GentleCondition::relation_uniqueness: return "relation-uniqueness";
    case GentleCondition::length_two: return "length-two";
    case GentleCondition::finite_dimensional: return "finite-dimensional";
  }
  return "?";
}

bool ValidationReport::ok() const {
  return std::ranges::all_of(conditions,
                             [](const ConditionResult& c) { return c.holds; });
}

const ConditionResult& ValidationReport::at(GentleCondition c) const {
  for (const auto& r : conditions)
    if (r.condition == c) return r;
  throw std::out_of_range("condition not in report");
}

bool operator==(const ValidationReport& x, const ValidationReport& y) {
  if (x.conditions.size() != y.conditions.size()) return false;
  for (std::size_t i = 0; i < x.conditions.size(); ++i) {
    const auto& l = x.conditions[i];
    const auto& r = y.conditions[i];
    if (l.condition != r.condition || l.holds != r.holds ||
        l.witnesses != r.witnesses)
      return false;
  }
  return true;
}

namespace {

// Arrows that follow a (t(a) = s(b)) split by membership of ab in I.
std::pair<std::vector<ArrowId>, std::vector<ArrowId>> split_successors(
    const Presentation& p, ArrowId a) {
  std::vector<ArrowId> free, related;
  for (ArrowId b : p.quiver().out_arrows(p.quiver().target(a)))
    (p.is_relation(a, b) ? related : free).push_back(b);
  return {free, related};
}

std::pair<std::vector<ArrowId>, std::vector<ArrowId>> split_predecessors(
    const Presentation& p, ArrowId a) {
  std::vector<ArrowId> free, related;
  for (ArrowId c : p.quiver().in_arrows(p.quiver().source(a)))
    (p.is_relation(c, a) ? related : free).push_back(c);
  return {free, related};
}

// Arrow successor digraph edge a -> b when ab is composable and not in I.
// Returns an arrow lying on a cycle of that digraph, if any.
std::optional<ArrowId> free_cycle_witness(const Presentation& p) {
  const std::size_t m = p.arrow_count();
  std::vector<int> state(m, 0);  // 0 new, 1 on stack, 2 done
  for (ArrowId root = 0; root < m; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<ArrowId, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [a, next] = stack.back();
      auto outs = p.quiver().out_arrows(p.quiver().target(a));
      if (next == outs.size()) {
        state[a] = 2;
        stack.pop_back();
        continue;
      }
      ArrowId b = outs[next++];
      if (p.is_relation(a, b)) continue;
      if (state[b] == 1) return b;
      if (state[b] == 0) {
        state[b] = 1;
        stack.emplace_back(b, 0);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate_gentle(const Presentation& p) {
  const Quiver& q = p.quiver();
  ValidationReport report;

  ConditionResult degree{GentleCondition::degree, true, {}};
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (q.out_arrows(v).size() > 2)
      degree.witnesses.push_back("vertex " + q.vertex_label(v) + ": " +
                                 std::to_string(q.out_arrows(v).size()) +
                                 " outgoing arrows");
    if (q.in_arrows(v).size() > 2)
      degree.witnesses.push_back("vertex " + q.vertex_label(v) + ": " +
                                 std::to_string(q.in_arrows(v).size()) +
                                 " incoming arrows");
  }

  ConditionResult nonzero{GentleCondition::nonzero_uniqueness, true, {}};
  ConditionResult related{GentleCondition::relation_uniqueness, true, {}};
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& label = q.arrow(a).label;
    auto [free_after, rel_after] = split_successors(p, a);
    auto [free_before, rel_before] = split_predecessors(p, a);
    if (free_after.size() > 1)
      nonzero.witnesses.push_back("arrow " + label + ": " +
                                  pair_label(q, a, free_after[0]) + ", " +
                                  pair_label(q, a, free_after[1]) +
                                  " both outside I");
    if (free_before.size() > 1)
      nonzero.witnesses.push_back("arrow " + label + ": " +
                                  pair_label(q, free_before[0], a) + ", " +
                                  pair_label(q, free_before[1], a) +
                                  " both outside I");
    if (rel_after.size() > 1)
      related.witnesses.push_back("arrow " + label + ": " +
                                  pair_label(q, a, rel_after[0]) + ", " +
                                  pair_label(q, a, rel_after[1]) +
                                  " both in I");
    if (rel_before.size() > 1)
      related.witnesses.push_back("arrow " + label + ": " +
                                  pair_label(q, rel_before[0], a) + ", " +
                                  pair_label(q, rel_before[1], a) +
                                  " both in I");
  }

  // Relations are composable length-two paths by construction.
  ConditionResult length_two{GentleCondition::length_two, true, {}};
  for (auto [a, b] : p.relations())
    if (q.target(a) != q.source(b))
      length_two.witnesses.push_back(pair_label(q, a, b) + " not composable");

  ConditionResult finite{GentleCondition::finite_dimensional, true, {}};
  if (auto w = free_cycle_witness(p))
    finite.witnesses.push_back("arrow " + q.arrow(*w).label +
                               " lies on an oriented cycle avoiding I");

  for (ConditionResult* r : {&degree, &nonzero, &related, &length_two, &finite}) {
    r->holds = r->witnesses.empty();
    report.conditions.push_back(std::move(*r));
  }
  return report;
}

std::optional<ArrowId> succ_nonzero(const Presentation& p, ArrowId a) {
  if (a >= p.arrow_count()) throw PresentationError("unknown arrow index");
  for (ArrowId b : p.quiver().out_arrows(p.quiver().target(a)))
    if (!p.is_relation(a, b)) return b;
  return std::nullopt;
}

std::optional<ArrowId> succ_relation(const Presentation& p, ArrowId a) {
  if (a >= p.arrow_count()) throw PresentationError("unknown arrow index");
  for (ArrowId b : p.quiver().out_arrows(p.quiver().target(a)))
    if (p.is_relation(a, b)) return b;
  return std::nullopt;
}

std::optional<ArrowId> succ_nonzero(const Presentation& p, std::string_view a) {
  return succ_nonzero(p, p.quiver().arrow_id(a));
}

std::optional<ArrowId> succ_relation(const Presentation& p,
                                     std::string_view a) {
  return succ_relation(p, p.quiver().arrow_id(a));
}

std::vector<ArrowId> nonzero_chain(const Presentation& p, ArrowId a) {
  std::vector<ArrowId> chain{a};
  while (auto b = succ_nonzero(p, chain.back())) {
    if (chain.size() > p.arrow_count())
      throw PresentationError("presentation is infinite-dimensional");
    chain.push_back(*b);
  }
  return chain;
}

bool is_finite_dimensional(const Presentation& p) {
  return !free_cycle_witness(p).has_value();
}

std::vector<Path> nonzero_paths(const Presentation& p) {
  if (!is_finite_dimensional(p))
    throw PresentationError("presentation is infinite-dimensional");
  std::vector<Path> out;
  for (VertexId v = 0; v < p.vertex_count(); ++v) out.push_back(Path::trivial(v));
  for (ArrowId a = 0; a < p.arrow_count(); ++a) {
    auto chain = nonzero_chain(p, a);
    for (std::size_t len = 1; len <= chain.size(); ++len)
      out.push_back(Path{p.quiver().source(a),
                         {chain.begin(), chain.begin() + len}});
  }
  return out;
}

std::size_t algebra_dimension(const Presentation& p) {
  return nonzero_paths(p).size();
}

std::size_t component_count(const Presentation& p) {
  const std::size_t n = p.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (ArrowId a = 0; a < p.arrow_count(); ++a) {
    auto r1 = find(p.quiver().source(a));
    auto r2 = find(p.quiver().target(a));
    if (r1 != r2) {
      parent[r1] = r2;
      --components;
    }
  }
  return components;
}

std::size_t betti_number(const Presentation& p) {
  return p.arrow_count() + component_count(p) - p.vertex_count();
}

std::size_t dim_between(const Presentation& p, VertexId u, VertexId v) {
  if (u >= p.vertex_count() || v >= p.vertex_count())
    throw PresentationError("unknown vertex index");
  std::size_t count = 0;
  for (const Path& path : nonzero_paths(p))
    if (path.source(p.quiver()) == u && path.target(p.quiver()) == v) ++count;
  return count;
}

std::size_t dim_between(const Presentation& p, std::string_view u,
                        std::string_view v) {
  return dim_between(p, p.quiver().vertex_id(u), p.quiver().vertex_id(v));
}

}  // namespace gentle
