#include "doctest.h"

#include <algorithm>

#include "gentle/format.hpp"
#include "oracle.hpp"

using namespace gentle;

namespace {

DimensionVector dv(const Presentation& p, std::initializer_list<const char*> labels) {
  DimensionVector out;
  for (const char* l : labels) ++out[p.quiver().vertex_id(l)];
  return out;
}

Letter D(const Presentation& p, const char* a) { return Letter::direct(p.quiver().arrow_id(a)); }
Letter I(const Presentation& p, const char* a) { return Letter::inv(p.quiver().arrow_id(a)); }

}  // namespace

TEST_CASE("word validity") {
  auto f3 = load_fixture("F3");
  const auto& q = f3.quiver();

  auto w = make_word(f3, {D(f3, "b1")});
  CHECK(w.points(q) == std::vector<VertexId>{q.vertex_id("1"), q.vertex_id("2'")});

  CHECK_THROWS_AS(make_word(f3, {D(f3, "a1"), D(f3, "a2")}), WordError);
  CHECK_THROWS_AS(make_word(f3, {I(f3, "a2"), I(f3, "a1")}), WordError);
  CHECK_THROWS_AS(make_word(f3, {D(f3, "a1"), I(f3, "a1")}), WordError);
  CHECK_THROWS_AS(make_word(f3, {D(f3, "a1"), D(f3, "b2")}), WordError);

  auto peak = make_word(f3, {I(f3, "a1"), D(f3, "b1")});
  CHECK(peak.points(q) ==
        std::vector<VertexId>{q.vertex_id("2"), q.vertex_id("1"), q.vertex_id("2'")});

  auto err = word_violation(f3, {D(f3, "a1"), D(f3, "a2")});
  REQUIRE(err.has_value());
  CHECK(err->find("relation") != std::string::npos);
}

TEST_CASE("canonical words") {
  auto f3 = load_fixture("F3");
  auto b1 = make_word(f3, {D(f3, "b1")});
  CHECK(canonical(f3, b1) == b1);
  CHECK(reverse_invert(f3, b1).letters == std::vector<Letter>{I(f3, "b1")});

  auto e = make_word(f3, f3.quiver().vertex_id("2"));
  CHECK(canonical(f3, e) == e);

  auto peak = make_word(f3, {I(f3, "a1"), D(f3, "b1")});
  CHECK(canonical(f3, peak) == canonical(f3, reverse_invert(f3, peak)));
  CHECK(reverse_invert(f3, reverse_invert(f3, peak)) == peak);
}

TEST_CASE("standard modules") {
  auto f1 = load_fixture("F1");
  auto f3 = load_fixture("F3");
  auto f5 = load_fixture("F5");

  CHECK(arrow_module(f1, f1.quiver().arrow_id("a1")).dimension_vector() == dv(f1, {"2", "6", "7"}));
  CHECK(arrow_module(f1, f1.quiver().arrow_id("a2")).dimension_vector() == dv(f1, {"3", "8", "9"}));
  CHECK(arrow_module(f3, f3.quiver().arrow_id("a3")).dimension_vector() == dv(f3, {"1", "2'"}));

  auto p1 = projective_module(f5, f5.quiver().vertex_id("1"));
  CHECK(p1.dimension() == 4);
  CHECK(p1.dimension_vector() == dv(f5, {"1", "2", "5", "4"}));
  CHECK(projective_module(f1, f1.quiver().vertex_id("2")).dimension() == 6);

  auto s2 = simple_module(f3, f3.quiver().vertex_id("2"));
  CHECK(s2.dimension_vector() == dv(f3, {"2"}));
  CHECK(word_string(f3, s2.word()) == "e(2)");

  CHECK(word_string(f1, arrow_module(f1, f1.quiver().arrow_id("a1")).word()) == "c2 d2");

  SUBCASE("arrow modules are uniserial") {
    for (const auto& fx : fixtures()) {
      auto p = parse_presentation(fx.text);
      for (ArrowId a = 0; a < p.arrow_count(); ++a) {
        auto m = arrow_module(p, a);
        const auto& letters = m.word().letters;
        CHECK(std::ranges::all_of(letters, [&](Letter l) { return l.inverse == letters[0].inverse; }));
      }
    }
  }

  SUBCASE("cyclic path modules") {
    const auto& q = f1.quiver();
    auto e2 = Path::trivial(q.vertex_id("2"));
    CHECK(cyclic_path_module(f1, e2) == projective_module(f1, q.vertex_id("2")));
    auto a1c2 = Path::of(q, {q.arrow_id("a1"), q.arrow_id("c2")});
    CHECK(cyclic_path_module(f1, a1c2).dimension_vector() == dv(f1, {"6", "7"}));
    auto zero = Path::of(q, {q.arrow_id("a1"), q.arrow_id("a2")});
    CHECK_THROWS_AS(cyclic_path_module(f1, zero), PresentationError);
  }
}

TEST_CASE("isomorphism") {
  auto f3 = load_fixture("F3");
  const auto& q = f3.quiver();
  auto b3 = arrow_module(f3, q.arrow_id("b3"));
  StringModule a1(f3, make_word(f3, {D(f3, "a1")}));
  CHECK(iso(b3, a1));
  CHECK_FALSE(iso(simple_module(f3, q.vertex_id("2")), simple_module(f3, q.vertex_id("3"))));

  auto peak = make_word(f3, {I(f3, "a1"), D(f3, "b1")});
  CHECK(iso(StringModule(f3, peak), StringModule(f3, reverse_invert(f3, peak))));

  auto f1 = load_fixture("F1");
  CHECK_THROWS_AS(iso(simple_module(f1, 0), simple_module(f3, 0)), PresentationError);
}

TEST_CASE("action modules") {
  auto f3 = load_fixture("F3");
  const auto& q = f3.quiver();

  SUBCASE("closure of the generator is everything") {
    auto p3 = projective_module(f3, q.vertex_id("3"));
    CHECK(p3.dimension_vector() == dv(f3, {"3", "1", "2'"}));
    auto act = action_from_word(f3, p3);
    CHECK_FALSE(action_violation(f3, act).has_value());
    std::vector<std::size_t> seeds;
    for (std::size_t i = 0; i < act.dimension(); ++i)
      if (act.points[i] == q.vertex_id("3")) seeds.push_back(i);
    CHECK(submodule_generated(act, seeds).size() == 3);
  }

  SUBCASE("removing the peak splits the word") {
    StringModule m(f3, make_word(f3, {I(f3, "a1"), D(f3, "b1")}));
    auto act = action_from_word(f3, m);
    std::vector<std::size_t> seeds;
    for (std::size_t i = 0; i < act.dimension(); ++i)
      if (act.points[i] == q.vertex_id("1")) seeds.push_back(i);
    auto closed = submodule_generated(act, seeds);
    CHECK(closed.size() == 3);
    auto parts = decompose(f3, act);
    CHECK(parts.size() == 1);

    // Quotient by the socle {2, 2'} leaves S(1); restricting keeps S(2) + S(2').
    std::vector<std::size_t> socle;
    for (std::size_t i = 0; i < act.dimension(); ++i)
      if (act.points[i] != q.vertex_id("1")) socle.push_back(i);
    auto sub = decompose(f3, restrict_to(act, socle));
    REQUIRE(sub.size() == 2);
    CHECK(iso(sub[0], simple_module(f3, q.vertex_id("2"))));
    CHECK(iso(sub[1], simple_module(f3, q.vertex_id("2'"))));
    auto top = decompose(f3, quotient(act, socle));
    REQUIRE(top.size() == 1);
    CHECK(iso(top[0], simple_module(f3, q.vertex_id("1"))));
    CHECK_THROWS_AS(quotient(act, seeds), PresentationError);
  }

  SUBCASE("empty quotient is the identity") {
    for (ArrowId a = 0; a < f3.arrow_count(); ++a) {
      auto m = arrow_module(f3, a);
      auto parts = decompose(f3, quotient(action_from_word(f3, m), {}));
      REQUIRE(parts.size() == 1);
      CHECK(parts[0] == m);
    }
  }

  SUBCASE("projectives match the literal path basis") {
    for (const auto& fx : fixtures()) {
      auto p = parse_presentation(fx.text);
      CAPTURE(fx.name);
      for (VertexId v = 0; v < p.vertex_count(); ++v) {
        auto m = oracle::projective_from_paths(p, v);
        CHECK_FALSE(action_violation(p, m).has_value());
        auto parts = decompose(p, m);
        REQUIRE(parts.size() == 1);
        CHECK(iso(parts[0], projective_module(p, v)));
      }
    }
  }

  SUBCASE("non-string components are rejected") {
    auto f2 = load_fixture("F2");
    const auto& q2 = f2.quiver();
    ActionModule kronecker(f2.arrow_count());
    kronecker.points = {q2.vertex_id("2"), q2.vertex_id("3")};
    kronecker.action[q2.arrow_id("a2")][0] = 1;
    kronecker.action[q2.arrow_id("b")][0] = 1;
    CHECK_THROWS_AS(decompose(f2, kronecker), WordError);
  }
}

TEST_CASE("rendering") {
  auto f3 = load_fixture("F3");
  auto peak = make_word(f3, {I(f3, "a1"), D(f3, "b1")});
  CHECK(word_string(f3, peak) == "-a1 b1");
  CHECK(parse_word(f3, "-a1 b1") == peak);
  CHECK(parse_word(f3, "-a1,b1") == peak);
  CHECK(parse_word(f3, "e(3')") == make_word(f3, f3.quiver().vertex_id("3'")));
  CHECK_THROWS_AS(parse_word(f3, "a1 a2"), WordError);
  CHECK_THROWS_AS(parse_word(f3, "a9"), PresentationError);
  CHECK(dimension_vector_string(f3, dv(f3, {"1", "2", "1"})) == "{1^2,2}");
}
