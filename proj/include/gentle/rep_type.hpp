#pragma once

#include <optional>
#include <vector>

#include "gentle/presentation.hpp"
#include "gentle/string_module.hpp"

namespace gentle {

/// Letter digraph: node 2a is the direct letter of arrow a, node 2a+1 its
/// inverse; l -> l' whenever l' may follow l in a string.
struct TransitionGraph {
  std::vector<Letter> nodes;
  std::vector<std::vector<std::size_t>> edges;

  static std::size_t node_of(Letter l) { return 2 * l.arrow + (l.inverse ? 1 : 0); }
  bool has_edge(Letter from, Letter to) const;
};

TransitionGraph transition_graph(const Presentation& p);

/// Letter sequence read cyclically.
struct CyclicWord {
  std::vector<Letter> letters;
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
};

/// Cyclic validity, both directions present, and not a proper power.
bool is_band(const Presentation& p, const CyclicWord& w);

/// Same cyclic word up to rotation and reverse-inversion.
bool same_band(const Presentation& p, const CyclicWord& x, const CyclicWord& y);

/// Shortest band, or none when the transition graph is acyclic. Among the
/// shortest cycles the class of the lexicographically least rotation is
/// chosen; it is reported in the opposite orientation, starting at its least
/// direct letter (the Kronecker band reads "b -a2", not "a2 -b").
/// Throws on infinite-dimensional input.
std::optional<CyclicWord> find_band(const Presentation& p);

bool is_representation_finite(const Presentation& p);

/// Exhaustive search over cyclic letter sequences of length <= max_len
/// (default 2 * arrow count), shortest first.
std::optional<CyclicWord> band_oracle(const Presentation& p,
                                      std::optional<std::size_t> max_len = {});

}  // namespace gentle
