#include "gentle/rep_type.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace gentle {

bool TransitionGraph::has_edge(Letter from, Letter to) const {
  const auto& outs = edges.at(node_of(from));
  return std::ranges::find(outs, node_of(to)) != outs.end();
}

TransitionGraph transition_graph(const Presentation& p) {
  TransitionGraph g;
  for (ArrowId a = 0; a < p.arrow_count(); ++a) {
    g.nodes.push_back(Letter::direct(a));
    g.nodes.push_back(Letter::inv(a));
  }
  g.edges.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (std::size_t j = 0; j < g.nodes.size(); ++j)
      if (valid_pair(p, g.nodes[i], g.nodes[j])) g.edges[i].push_back(j);
  return g;
}

namespace {

bool is_proper_power(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return true;
  }
  return false;
}

std::vector<Letter> rotated(const std::vector<Letter>& w, std::size_t k) {
  std::vector<Letter> out(w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return out;
}

std::vector<Letter> reversed_inverse(const std::vector<Letter>& w) {
  std::vector<Letter> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

}  // namespace

bool is_band(const Presentation& p, const CyclicWord& w) {
  const auto& l = w.letters;
  if (l.empty()) return false;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (!valid_pair(p, l[i], l[(i + 1) % l.size()])) return false;
  bool direct = std::ranges::any_of(l, [](Letter x) { return !x.inverse; });
  bool inverse = std::ranges::any_of(l, [](Letter x) { return x.inverse; });
  return direct && inverse && !is_proper_power(l);
}

bool same_band(const Presentation&, const CyclicWord& x, const CyclicWord& y) {
  if (x.letters.size() != y.letters.size()) return false;
  auto inv = reversed_inverse(y.letters);
  for (std::size_t k = 0; k < x.letters.size(); ++k) {
    auto r = rotated(x.letters, k);
    if (r == y.letters || r == inv) return true;
  }
  return x.letters.empty();
}

std::optional<CyclicWord> find_band(const Presentation& p) {
  if (!is_finite_dimensional(p))
    throw PresentationError("find_band: presentation is infinite-dimensional");
  const TransitionGraph g = transition_graph(p);
  const std::size_t n = g.nodes.size();
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<std::size_t>> reverse(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : g.edges[u]) reverse[v].push_back(u);

  // Distances to s inside the subgraph of nodes >= s, so that s is the least
  // node (hence the lexicographically least rotation start) of the cycle.
  auto distances_to = [&](std::size_t s) {
    std::vector<std::size_t> dist(n, inf);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t u : reverse[v])
        if (u >= s && dist[u] == inf) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
    }
    return dist;
  };

  std::vector<std::vector<std::size_t>> dist(n);
  std::size_t girth = inf;
  for (std::size_t s = 0; s < n; ++s) {
    dist[s] = distances_to(s);
    for (std::size_t u : g.edges[s])
      if (u >= s && dist[s][u] != inf) girth = std::min(girth, dist[s][u] + 1);
  }
  if (girth == inf) return std::nullopt;

  for (std::size_t s = 0; s < n; ++s) {
    const auto& d = dist[s];
    bool reaches = std::ranges::any_of(g.edges[s], [&](std::size_t u) {
      return u >= s && d[u] != inf && d[u] + 1 == girth;
    });
    if (!reaches) continue;
    // On a shortest cycle every remaining distance is exact, so taking the
    // least admissible successor never dead-ends.
    std::vector<Letter> cycle{g.nodes[s]};
    std::size_t cur = s;
    for (std::size_t remaining = girth - 1; remaining > 0; --remaining) {
      std::size_t next = inf;
      for (std::size_t u : g.edges[cur])
        if (u > s && d[u] == remaining) next = std::min(next, u);
      cur = next;
      cycle.push_back(g.nodes[cur]);
    }
    bool direct = std::ranges::any_of(cycle, [](Letter x) { return !x.inverse; });
    bool inverse = std::ranges::any_of(cycle, [](Letter x) { return x.inverse; });
    if (!direct || !inverse)
      throw PresentationError("find_band: monotone cycle in a finite-dimensional presentation");

    auto shown = reversed_inverse(cycle);
    std::size_t best = 0;
    for (std::size_t k = 0; k < shown.size(); ++k)
      if (!shown[k].inverse && (shown[best].inverse || shown[k] < shown[best]))
        best = k;
    return CyclicWord{rotated(shown, best)};
  }
  return std::nullopt;
}

bool is_representation_finite(const Presentation& p) {
  return !find_band(p).has_value();
}

std::optional<CyclicWord> band_oracle(const Presentation& p,
                                      std::optional<std::size_t> max_len) {
  const std::size_t limit = max_len.value_or(2 * p.arrow_count());
  std::vector<Letter> alphabet;
  for (ArrowId a = 0; a < p.arrow_count(); ++a) {
    alphabet.push_back(Letter::direct(a));
    alphabet.push_back(Letter::inv(a));
  }
  std::vector<Letter> current;
  std::optional<CyclicWord> found;

  // Prefixes are extended only while they remain valid words; any cyclic
  // word has all of its prefixes valid, so nothing is skipped.
  auto extend = [&](auto&& self, std::size_t target) -> bool {
    if (current.size() == target) {
      CyclicWord candidate{current};
      if (is_band(p, candidate)) {
        found = candidate;
        return true;
      }
      return false;
    }
    for (Letter l : alphabet) {
      current.push_back(l);
      bool ok = !word_violation(p, current).has_value();
      if (ok && self(self, target)) return true;
      current.pop_back();
    }
    return false;
  };

  for (std::size_t len = 1; len <= limit; ++len) {
    current.clear();
    if (extend(extend, len)) return found;
  }
  return std::nullopt;
}

}  // namespace gentle
