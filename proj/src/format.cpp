#include "gentle/format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace gentle {

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<std::string> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.emplace_back("->");
      i += 2;
      continue;
    }
    if (!is_ident_char(c))
      throw ParseError(lineno, std::string("unexpected character '") + c + "'");
    std::size_t j = i;
    while (j < line.size() && is_ident_char(line[j])) ++j;
    out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_identifier(const std::string& s) {
  return !s.empty() && std::ranges::all_of(s, is_ident_char);
}

}  // namespace

PresentationFile parse_file(std::string_view text) {
  PresentationFile file;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    auto tokens = tokenize(line, lineno);
    if (tokens.empty()) continue;
    const std::string& kw = tokens.front();
    std::vector<std::string> args(tokens.begin() + 1, tokens.end());
    auto all_idents = std::ranges::all_of(args, is_identifier);
    if (kw == "vertex") {
      if (args.empty() || !all_idents)
        throw ParseError(lineno, "expected: vertex <id>+");
      file.statements.push_back({Statement::Kind::vertex, lineno, args});
    } else if (kw == "arrow") {
      if (args.size() != 4 || args[2] != "->" || !is_identifier(args[0]) ||
          !is_identifier(args[1]) || !is_identifier(args[3]))
        throw ParseError(lineno, "expected: arrow <label> <src> -> <tgt>");
      file.statements.push_back(
          {Statement::Kind::arrow, lineno, {args[0], args[1], args[3]}});
    } else if (kw == "rel") {
      if (args.size() != 2 || !all_idents)
        throw ParseError(lineno, "expected: rel <label1> <label2>");
      file.statements.push_back({Statement::Kind::rel, lineno, args});
    } else {
      throw ParseError(lineno, "unknown statement '" + kw + "'");
    }
  }
  return file;
}

Presentation to_presentation(const PresentationFile& file) {
  std::vector<std::string> vertices;
  std::vector<RawArrow> arrows;
  std::vector<RawRelation> relations;
  std::set<std::string> vertex_set;
  std::map<std::string, std::pair<std::string, std::string>> arrow_ends;
  std::set<RawRelation> relation_set;

  for (const Statement& st : file.statements) {
    switch (st.kind) {
      case Statement::Kind::vertex:
        for (const auto& v : st.args) {
          if (!vertex_set.insert(v).second)
            throw ParseError(st.line, "duplicate vertex '" + v + "'");
          vertices.push_back(v);
        }
        break;
      case Statement::Kind::arrow: {
        const auto& label = st.args[0];
        if (arrow_ends.contains(label))
          throw ParseError(st.line, "duplicate arrow '" + label + "'");
        for (std::size_t k : {1, 2})
          if (!vertex_set.contains(st.args[k]))
            throw ParseError(st.line, "unknown vertex '" + st.args[k] + "'");
        arrow_ends[label] = {st.args[1], st.args[2]};
        arrows.push_back({label, st.args[1], st.args[2]});
        break;
      }
      case Statement::Kind::rel: {
        for (const auto& a : st.args)
          if (!arrow_ends.contains(a))
            throw ParseError(st.line, "unknown arrow '" + a + "'");
        const std::string& a = st.args[0];
        const std::string& b = st.args[1];
        if (arrow_ends[a].second != arrow_ends[b].first)
          throw ParseError(st.line, "relation " + a + b + " is not composable");
        if (!relation_set.insert({a, b}).second)
          throw ParseError(st.line, "duplicate relation " + a + b);
        relations.emplace_back(a, b);
        break;
      }
    }
  }
  return Presentation::build(vertices, arrows, relations);
}

Presentation parse_presentation(std::string_view text) {
  return to_presentation(parse_file(text));
}

std::string render(const Presentation& p) {
  const Quiver& q = p.quiver();
  std::ostringstream out;
  if (q.vertex_count() > 0) {
    out << "vertex";
    for (VertexId v = 0; v < q.vertex_count(); ++v) out << ' ' << q.vertex_label(v);
    out << '\n';
  }
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    out << "arrow " << q.arrow(a).label << ' ' << q.vertex_label(q.source(a))
        << " -> " << q.vertex_label(q.target(a)) << '\n';
  for (auto [a, b] : p.relations())
    out << "rel " << q.arrow(a).label << ' ' << q.arrow(b).label << '\n';
  return out.str();
}

Word parse_word(const Presentation& p, std::string_view text) {
  std::string s(text);
  std::ranges::replace(s, ',', ' ');
  std::istringstream in(s);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw WordError("empty word");
  const Quiver& q = p.quiver();
  if (tokens.size() == 1 && tokens[0].starts_with("e(") && tokens[0].ends_with(")")) {
    auto v = tokens[0].substr(2, tokens[0].size() - 3);
    return make_word(p, q.vertex_id(v));
  }
  std::vector<Letter> letters;
  for (const auto& tok : tokens) {
    bool inverse = tok.starts_with('-');
    letters.push_back({q.arrow_id(inverse ? tok.substr(1) : tok), inverse});
  }
  return make_word(p, std::move(letters));
}

namespace {

const char* const kF1 = R"(# triangle a1 a2 a3 with three attached relation triangles
vertex 1 2 3 4 5 6 7 8 9
arrow a1 1 -> 2
arrow a2 2 -> 3
arrow a3 3 -> 1
arrow c1 1 -> 4
arrow d1 4 -> 5
arrow b3 5 -> 3
arrow c2 2 -> 6
arrow d2 6 -> 7
arrow b1 7 -> 1
arrow c3 3 -> 8
arrow d3 8 -> 9
arrow b2 9 -> 2
rel a1 a2
rel a2 a3
rel a3 a1
rel b1 c1
rel b2 c2
rel b3 c3
rel d1 b3
rel d2 b1
rel d3 b2
)";

const char* const kF2 = R"(# square with a doubled middle arrow
vertex 1 2 3 4
arrow a1 1 -> 2
arrow a2 2 -> 3
arrow a3 3 -> 4
arrow a4 4 -> 1
arrow b 2 -> 3
rel a1 a2
rel a2 a3
rel a3 a4
rel a4 a1
)";

const char* const kF3 = R"(# two full-relational triangles sharing vertex 1
vertex 1 2 3 2' 3'
arrow a1 1 -> 2
arrow a2 2 -> 3
arrow a3 3 -> 1
arrow b1 1 -> 2'
arrow b2 2' -> 3'
arrow b3 3' -> 1
rel a1 a2
rel a2 a3
rel a3 a1
rel b1 b2
rel b2 b3
rel b3 b1
)";

const char* const kF4 = R"(# triangle and pentagon sharing vertex 1, with spokes
vertex 1 2 3 2' 3' 4' 5' 2'' 3'' 4'' 5''
arrow a1 1 -> 2
arrow a2 2 -> 3
arrow a3 3 -> 1
arrow b1 1 -> 2'
arrow b2 2' -> 3'
arrow b3 3' -> 4'
arrow b4 4' -> 5'
arrow b5 5' -> 1
arrow e2 2' -> 2''
arrow e3 3' -> 3''
arrow e4 4' -> 4''
arrow e5 5' -> 5''
rel a1 a2
rel a2 a3
rel a3 a1
rel b1 b2
rel b2 b3
rel b3 b4
rel b4 b5
rel b5 b1
)";

const char* const kF5 = R"(# one full-relational triangle with a tail at each vertex
vertex 1 2 3 4 5 6
arrow a1 1 -> 2
arrow a2 2 -> 3
arrow a3 3 -> 1
arrow a4 1 -> 4
arrow a5 2 -> 5
arrow a6 3 -> 6
rel a1 a2
rel a2 a3
rel a3 a1
)";

const char* const kT0 = R"(# a single arrow
vertex 1 2
arrow a 1 -> 2
)";

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all{
      {"F1", kF1}, {"F2", kF2}, {"F3", kF3},
      {"F4", kF4}, {"F5", kF5}, {"T0", kT0},
  };
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw PresentationError("unknown fixture '" + std::string(name) + "'");
}

Presentation load_fixture(std::string_view name) {
  return parse_presentation(fixture(name).text);
}

namespace {

/// Arrow list under construction with degree bookkeeping.
struct Draft {
  std::size_t n;
  std::vector<std::pair<VertexId, VertexId>> arrows;
  std::vector<std::vector<ArrowId>> out, in;
  std::set<Relation> forced;

  explicit Draft(std::size_t n) : n(n), out(n), in(n) {}
  bool room(VertexId s, VertexId t) const {
    return out[s].size() < 2 && in[t].size() < 2;
  }
  ArrowId add(VertexId s, VertexId t) {
    ArrowId a = arrows.size();
    arrows.emplace_back(s, t);
    out[s].push_back(a);
    in[t].push_back(a);
    return a;
  }
};

/// Relations at vertex v: each incoming arrow with two continuations relates
/// to exactly one of them, and symmetrically for outgoing arrows. Choices
/// must contain every forced pair at v.
std::vector<Relation> local_relations(const Draft& d, VertexId v,
                                      std::mt19937_64& rng) {
  const auto& ins = d.in[v];
  const auto& outs = d.out[v];
  std::vector<std::vector<Relation>> options;
  if (ins.size() == 2 && outs.size() == 2) {
    options.push_back({{ins[0], outs[0]}, {ins[1], outs[1]}});
    options.push_back({{ins[0], outs[1]}, {ins[1], outs[0]}});
  } else if (ins.size() == 2 && outs.size() == 1) {
    options.push_back({{ins[0], outs[0]}});
    options.push_back({{ins[1], outs[0]}});
  } else if (ins.size() == 1 && outs.size() == 2) {
    options.push_back({{ins[0], outs[0]}});
    options.push_back({{ins[0], outs[1]}});
  } else if (ins.size() == 1 && outs.size() == 1) {
    options.push_back({});
    options.push_back({{ins[0], outs[0]}});
  } else {
    return {};
  }
  std::vector<std::vector<Relation>> allowed;
  for (auto& opt : options) {
    bool ok = true;
    for (const Relation& r : d.forced) {
      bool here = d.arrows[r.first].second == v;
      if (here && std::ranges::find(opt, r) == opt.end()) ok = false;
    }
    if (ok) allowed.push_back(opt);
  }
  if (allowed.empty()) return {};
  std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
  return allowed[pick(rng)];
}

}  // namespace

Presentation gen_random_gentle(std::size_t vertex_count, std::uint64_t seed) {
  if (vertex_count == 0)
    throw PresentationError("gen_random_gentle: need at least one vertex");
  const std::size_t n = vertex_count;
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  std::vector<std::string> vertices;
  for (std::size_t i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));

  std::size_t budget = uniform(n > 1 ? n - 1 : 0, 2 * n);
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt > 0 && attempt % 8 == 0 && budget > 0) --budget;
    Draft d(n);

    if (n >= 3 && uniform(0, 2) == 0) {
      std::vector<VertexId> order(n);
      for (VertexId v = 0; v < n; ++v) order[v] = v;
      std::ranges::shuffle(order, rng);
      std::size_t len = uniform(3, std::min<std::size_t>(n, 5));
      std::vector<ArrowId> cycle;
      for (std::size_t i = 0; i < len; ++i)
        cycle.push_back(d.add(order[i], order[(i + 1) % len]));
      for (std::size_t i = 0; i < len; ++i)
        d.forced.insert({cycle[i], cycle[(i + 1) % len]});
    }

    for (std::size_t tries = 0; d.arrows.size() < budget && tries < 8 * n + 8; ++tries) {
      VertexId s = uniform(0, n - 1), t = uniform(0, n - 1);
      if (s == t && uniform(0, 3) != 0) continue;
      if (d.room(s, t)) d.add(s, t);
    }

    std::vector<Relation> rels;
    for (VertexId v = 0; v < n; ++v)
      for (const Relation& r : local_relations(d, v, rng)) rels.push_back(r);

    std::vector<RawArrow> arrows;
    for (ArrowId a = 0; a < d.arrows.size(); ++a)
      arrows.push_back({"x" + std::to_string(a + 1), vertices[d.arrows[a].first],
                        vertices[d.arrows[a].second]});
    std::vector<RawRelation> raw;
    for (auto [a, b] : rels) raw.emplace_back(arrows[a].label, arrows[b].label);
    Presentation p = Presentation::build(vertices, arrows, raw);
    if (validate_gentle(p).ok()) return p;
  }
}

}  // namespace gentle
