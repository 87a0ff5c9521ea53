#include "gentle/string_module.hpp"

#include <algorithm>
#include <numeric>

namespace gentle {

bool valid_pair(const Presentation& p, Letter first, Letter second) {
  const Quiver& q = p.quiver();
  if (first.end(q) != second.start(q)) return false;
  if (second == first.inverted()) return false;
  if (!first.inverse && !second.inverse)
    return !p.is_relation(first.arrow, second.arrow);
  if (first.inverse && second.inverse)
    return !p.is_relation(second.arrow, first.arrow);
  return true;
}

std::vector<VertexId> Word::points(const Quiver& q) const {
  std::vector<VertexId> out{base};
  for (const Letter& l : letters) out.push_back(l.end(q));
  return out;
}

std::optional<std::string> word_violation(const Presentation& p,
                                          const std::vector<Letter>& letters) {
  const Quiver& q = p.quiver();
  for (const Letter& l : letters)
    if (l.arrow >= q.arrow_count()) return "unknown arrow index";
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    Letter a = letters[i], b = letters[i + 1];
    auto at = " at position " + std::to_string(i + 1);
    if (a.end(q) != b.start(q)) return "endpoint mismatch" + at;
    if (b == a.inverted()) return "letter followed by its inverse" + at;
    if (!valid_pair(p, a, b)) return "relation substring" + at;
  }
  return std::nullopt;
}

Word make_word(const Presentation& p, std::vector<Letter> letters) {
  if (letters.empty())
    throw WordError("empty word needs a base vertex");
  if (auto err = word_violation(p, letters)) throw WordError(*err);
  VertexId base = letters.front().start(p.quiver());
  return Word{base, std::move(letters)};
}

Word make_word(const Presentation& p, VertexId base) {
  if (base >= p.vertex_count()) throw WordError("unknown base vertex");
  return Word{base, {}};
}

Word reverse_invert(const Presentation& p, const Word& w) {
  if (w.empty()) return w;
  Word out;
  out.letters.reserve(w.length());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(it->inverted());
  out.base = out.letters.front().start(p.quiver());
  return out;
}

Word canonical(const Presentation& p, const Word& w) {
  if (w.empty()) return w;
  Word r = reverse_invert(p, w);
  return std::ranges::lexicographical_compare(r.letters, w.letters) ? r : w;
}

StringModule::StringModule(const Presentation& p, const Word& w)
    : word_(canonical(p, w)),
      points_(word_.points(p.quiver())),
      fingerprint_(p.fingerprint()) {
  if (auto err = word_violation(p, w.letters)) throw WordError(*err);
}

DimensionVector StringModule::dimension_vector() const {
  DimensionVector dv;
  for (VertexId v : points_) ++dv[v];
  return dv;
}

DimensionVector dimension_vector(const StringModule& m) {
  return m.dimension_vector();
}

bool iso(const StringModule& m, const StringModule& n) {
  if (m.presentation_fingerprint() != n.presentation_fingerprint())
    throw PresentationError("iso: modules over different presentations");
  return m.word() == n.word();
}

StringModule simple_module(const Presentation& p, VertexId v) {
  return StringModule(p, make_word(p, v));
}

namespace {

std::vector<Letter> direct_letters(const std::vector<ArrowId>& arrows) {
  std::vector<Letter> out;
  for (ArrowId a : arrows) out.push_back(Letter::direct(a));
  return out;
}

}  // namespace

StringModule arrow_module(const Presentation& p, ArrowId a) {
  return cyclic_path_module(p, Path{p.quiver().source(a), {a}});
}

StringModule projective_module(const Presentation& p, VertexId v) {
  if (v >= p.vertex_count()) throw PresentationError("unknown vertex index");
  auto outs = p.quiver().out_arrows(v);
  if (outs.size() > 2)
    throw PresentationError("projective_module: vertex " +
                            p.quiver().vertex_label(v) +
                            " has more than two outgoing arrows");
  if (outs.empty()) return simple_module(p, v);
  if (outs.size() == 1)
    return StringModule(p, make_word(p, direct_letters(nonzero_chain(p, outs[0]))));
  auto left = nonzero_chain(p, outs[0]);
  auto right = nonzero_chain(p, outs[1]);
  std::vector<Letter> letters;
  for (auto it = left.rbegin(); it != left.rend(); ++it)
    letters.push_back(Letter::inv(*it));
  for (ArrowId a : right) letters.push_back(Letter::direct(a));
  return StringModule(p, make_word(p, std::move(letters)));
}

StringModule cyclic_path_module(const Presentation& p, const Path& q) {
  if (!is_nonzero(p, q)) throw PresentationError("cyclic_path_module: zero path");
  if (q.is_trivial()) return projective_module(p, q.base);
  auto next = succ_nonzero(p, q.arrows.back());
  if (!next) return simple_module(p, q.target(p.quiver()));
  return StringModule(p, make_word(p, direct_letters(nonzero_chain(p, *next))));
}

std::optional<std::string> action_violation(const Presentation& p,
                                            const ActionModule& m) {
  const Quiver& q = p.quiver();
  if (m.action.size() != q.arrow_count()) return "action table size mismatch";
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    std::vector<bool> hit(m.dimension(), false);
    for (auto [from, to] : m.action[a]) {
      if (from >= m.dimension() || to >= m.dimension())
        return "action of " + q.arrow(a).label + " leaves the basis";
      if (m.points[from] != q.source(a) || m.points[to] != q.target(a))
        return "action of " + q.arrow(a).label + " breaks endpoints";
      if (hit[to]) return "action of " + q.arrow(a).label + " not injective";
      hit[to] = true;
    }
  }
  for (auto [a, b] : p.relations())
    for (auto [from, mid] : m.action[a])
      if (m.action[b].contains(mid))
        return "composite " + q.arrow(a).label + q.arrow(b).label +
               " acts nontrivially";
  return std::nullopt;
}

ActionModule action_from_word(const Presentation& p, const StringModule& m) {
  ActionModule out(p.arrow_count());
  out.points = m.point_vertices();
  const auto& letters = m.word().letters;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter& l = letters[i];
    if (l.inverse)
      out.action[l.arrow][i + 1] = i;
    else
      out.action[l.arrow][i] = i + 1;
  }
  return out;
}

std::vector<std::size_t> submodule_generated(
    const ActionModule& m, const std::vector<std::size_t>& seeds) {
  std::vector<bool> in(m.dimension(), false);
  std::vector<std::size_t> stack;
  for (std::size_t s : seeds) {
    if (s >= m.dimension()) throw PresentationError("seed point out of range");
    if (!in[s]) {
      in[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& act : m.action) {
      auto it = act.find(x);
      if (it != act.end() && !in[it->second]) {
        in[it->second] = true;
        stack.push_back(it->second);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

ActionModule quotient(const ActionModule& m,
                      const std::vector<std::size_t>& closed) {
  std::vector<bool> removed(m.dimension(), false);
  for (std::size_t x : closed) {
    if (x >= m.dimension()) throw PresentationError("point out of range");
    removed[x] = true;
  }
  for (const auto& act : m.action)
    for (auto [from, to] : act)
      if (removed[from] && !removed[to])
        throw PresentationError("quotient: point set is not action-closed");

  std::vector<std::size_t> index(m.dimension(), 0);
  ActionModule out(m.action.size());
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (removed[i]) continue;
    index[i] = out.points.size();
    out.points.push_back(m.points[i]);
  }
  for (std::size_t a = 0; a < m.action.size(); ++a)
    for (auto [from, to] : m.action[a])
      if (!removed[from] && !removed[to])
        out.action[a][index[from]] = index[to];
  return out;
}

ActionModule restrict_to(const ActionModule& m,
                         const std::vector<std::size_t>& closed) {
  std::vector<bool> keep(m.dimension(), false);
  for (std::size_t x : closed) {
    if (x >= m.dimension()) throw PresentationError("point out of range");
    keep[x] = true;
  }
  for (const auto& act : m.action)
    for (auto [from, to] : act)
      if (keep[from] && !keep[to])
        throw PresentationError("restrict_to: point set is not action-closed");

  std::vector<std::size_t> index(m.dimension(), 0);
  ActionModule out(m.action.size());
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (!keep[i]) continue;
    index[i] = out.points.size();
    out.points.push_back(m.points[i]);
  }
  for (std::size_t a = 0; a < m.action.size(); ++a)
    for (auto [from, to] : m.action[a])
      if (keep[from]) out.action[a][index[from]] = index[to];
  return out;
}

std::vector<StringModule> decompose(const Presentation& p,
                                    const ActionModule& m) {
  struct Edge {
    std::size_t other;
    Letter letter;  // letter read when walking from this point to `other`
  };
  const std::size_t n = m.dimension();
  std::vector<std::vector<Edge>> adj(n);
  for (ArrowId a = 0; a < m.action.size(); ++a)
    for (auto [from, to] : m.action[a]) {
      adj[from].push_back({to, Letter::direct(a)});
      adj[to].push_back({from, Letter::inv(a)});
    }

  std::vector<int> component(n, -1);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<std::size_t> stack{root};
    component[root] = id;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      members[id].push_back(x);
      for (const Edge& e : adj[x])
        if (component[e.other] < 0) {
          component[e.other] = id;
          stack.push_back(e.other);
        }
    }
  }

  std::vector<StringModule> out;
  for (auto& pts : members) {
    std::ranges::sort(pts);
    std::size_t edges = 0;
    for (std::size_t x : pts) {
      if (adj[x].size() > 2)
        throw WordError("decompose: component is not path-shaped");
      edges += adj[x].size();
    }
    if (edges / 2 + 1 != pts.size())
      throw WordError("decompose: component contains a cycle");
    if (pts.size() == 1) {
      out.emplace_back(p, make_word(p, m.points[pts.front()]));
      continue;
    }
    auto start = std::ranges::find_if(
        pts, [&](std::size_t x) { return adj[x].size() == 1; });
    std::vector<Letter> letters;
    std::size_t prev = n, cur = *start;
    while (true) {
      const Edge* step = nullptr;
      for (const Edge& e : adj[cur])
        if (e.other != prev) step = &e;
      if (step == nullptr) break;
      letters.push_back(step->letter);
      prev = cur;
      cur = step->other;
    }
    out.emplace_back(p, make_word(p, std::move(letters)));
  }
  return out;
}

std::size_t total_dimension(const std::vector<StringModule>& ms) {
  return std::accumulate(ms.begin(), ms.end(), std::size_t{0},
                         [](std::size_t acc, const StringModule& m) {
                           return acc + m.dimension();
                         });
}

std::string word_string(const Presentation& p, const Word& w) {
  const Quiver& q = p.quiver();
  if (w.empty()) return "e(" + q.vertex_label(w.base) + ")";
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ' ';
    if (l.inverse) out += '-';
    out += q.arrow(l.arrow).label;
  }
  return out;
}

std::string dimension_vector_string(const Presentation& p,
                                    const DimensionVector& dv) {
  std::string out = "{";
  for (auto [v, n] : dv) {
    if (out.size() > 1) out += ',';
    out += p.quiver().vertex_label(v);
    if (n > 1) out += "^" + std::to_string(n);
  }
  return out + "}";
}

}  // namespace gentle
