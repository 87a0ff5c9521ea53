#include "doctest.h"

#include <algorithm>

#include "gentle/format.hpp"
#include "oracle.hpp"

using namespace gentle;

namespace {

Presentation two_cycle(bool with_relations) {
  std::vector<std::string> v{"1", "2"};
  std::vector<RawArrow> a{{"x", "1", "2"}, {"y", "2", "1"}};
  std::vector<RawRelation> r;
  if (with_relations) r = {{"x", "y"}, {"y", "x"}};
  return Presentation::build(v, a, r);
}

Presentation with_extra_relation(const Presentation& p, RawRelation extra) {
  const auto& q = p.quiver();
  std::vector<std::string> v;
  std::vector<RawArrow> a;
  std::vector<RawRelation> r;
  for (VertexId i = 0; i < q.vertex_count(); ++i) v.push_back(q.vertex_label(i));
  for (ArrowId i = 0; i < q.arrow_count(); ++i)
    a.push_back({q.arrow(i).label, q.vertex_label(q.source(i)), q.vertex_label(q.target(i))});
  for (auto [x, y] : p.relations()) r.emplace_back(q.arrow(x).label, q.arrow(y).label);
  r.push_back(std::move(extra));
  return Presentation::build(v, a, r);
}

}  // namespace

TEST_CASE("building presentations") {
  auto f1 = load_fixture("F1");
  CHECK(f1.vertex_count() == 9);
  CHECK(f1.arrow_count() == 12);
  CHECK(f1.relations().size() == 9);

  std::vector<std::string> one{"1"};
  auto point = Presentation::build(one, {}, {});
  CHECK(point.vertex_count() == 1);
  CHECK(validate_gentle(point).ok());
  CHECK(algebra_dimension(point) == 1);

  CHECK_THROWS_AS(with_extra_relation(f1, {"a1", "c1"}), PresentationError);
  CHECK_THROWS_AS(with_extra_relation(f1, {"a1", "a2"}), PresentationError);

  std::vector<std::string> dup{"1", "1"};
  CHECK_THROWS_AS(Presentation::build(dup, {}, {}), PresentationError);
  std::vector<RawArrow> dangling{{"a", "1", "9"}};
  CHECK_THROWS_AS(Presentation::build(one, dangling, {}), PresentationError);
}

TEST_CASE("gentle validation") {
  auto f1 = load_fixture("F1");
  auto report = validate_gentle(f1);
  CHECK(report.ok());
  CHECK(report.conditions.size() == 5);

  SUBCASE("a second relation after a1 breaks condition (3) at a1") {
    auto broken = with_extra_relation(f1, {"a1", "c2"});
    auto r = validate_gentle(broken);
    CHECK_FALSE(r.ok());
    const auto& c = r.at(GentleCondition::relation_uniqueness);
    CHECK_FALSE(c.holds);
    REQUIRE_FALSE(c.witnesses.empty());
    CHECK(c.witnesses.front().find("a1") != std::string::npos);
    CHECK(r.at(GentleCondition::degree).holds);
  }

  SUBCASE("a relation-free oriented cycle is infinite-dimensional") {
    auto p = two_cycle(false);
    auto r = validate_gentle(p);
    CHECK_FALSE(r.at(GentleCondition::finite_dimensional).holds);
    CHECK_FALSE(is_finite_dimensional(p));
    CHECK_THROWS(algebra_dimension(p));
  }

  SUBCASE("every violated condition is listed") {
    std::vector<std::string> v{"1", "2"};
    std::vector<RawArrow> a{{"x", "1", "2"}, {"y", "1", "2"}, {"z", "1", "2"},
                            {"u", "2", "1"}};
    auto p = Presentation::build(v, a, {});
    auto r = validate_gentle(p);
    CHECK_FALSE(r.at(GentleCondition::degree).holds);
    CHECK_FALSE(r.at(GentleCondition::nonzero_uniqueness).holds);
    CHECK_FALSE(r.at(GentleCondition::finite_dimensional).holds);
  }

  CHECK(validate_gentle(f1) == validate_gentle(f1));
}

TEST_CASE("successors") {
  auto f1 = load_fixture("F1");
  auto f2 = load_fixture("F2");
  auto f5 = load_fixture("F5");
  const auto& q1 = f1.quiver();
  CHECK(succ_nonzero(f1, "a1") == q1.arrow_id("c2"));
  CHECK(succ_relation(f1, "a1") == q1.arrow_id("a2"));
  CHECK_FALSE(succ_relation(f1, "c1").has_value());
  CHECK_FALSE(succ_nonzero(f2, "a2").has_value());
  CHECK_FALSE(succ_relation(f2, "b").has_value());
  CHECK(succ_nonzero(f5, "a3") == f5.quiver().arrow_id("a4"));
  CHECK_THROWS_AS(succ_nonzero(f1, "zz"), PresentationError);

  for (const auto& fx : fixtures()) {
    auto p = parse_presentation(fx.text);
    const auto& q = p.quiver();
    for (ArrowId a = 0; a < p.arrow_count(); ++a) {
      auto n = succ_nonzero(p, a);
      auto r = succ_relation(p, a);
      if (n && r) CHECK(*n != *r);
      std::size_t found = (n ? 1 : 0) + (r ? 1 : 0);
      CHECK(found == q.out_arrows(q.target(a)).size());
    }
  }
}

TEST_CASE("path basis and dimension") {
  CHECK(algebra_dimension(load_fixture("T0")) == 3);

  // Values frozen from the brute-force enumeration in oracle.hpp.
  CHECK(oracle::nonzero_paths(load_fixture("F1")).size() == 39);
  CHECK(oracle::nonzero_paths(load_fixture("F3")).size() == 13);

  CHECK(algebra_dimension(load_fixture("F1")) == 39);
  CHECK(algebra_dimension(load_fixture("F3")) == 13);

  for (const auto& fx : fixtures()) {
    auto p = parse_presentation(fx.text);
    CAPTURE(fx.name);
    auto paths = nonzero_paths(p);
    auto brute = oracle::nonzero_paths(p);
    CHECK(paths.size() == brute.size());
    for (const Path& path : paths) {
      CHECK(is_nonzero(p, path));
      CHECK(std::ranges::find(brute, path) != brute.end());
    }
    std::size_t chains = p.vertex_count();
    for (ArrowId a = 0; a < p.arrow_count(); ++a) chains += nonzero_chain(p, a).size();
    CHECK(algebra_dimension(p) == chains);
  }
}

TEST_CASE("finite dimension") {
  CHECK(is_finite_dimensional(load_fixture("F1")));
  CHECK(is_finite_dimensional(load_fixture("F2")));
  CHECK_FALSE(is_finite_dimensional(two_cycle(false)));
  CHECK(is_finite_dimensional(two_cycle(true)));
}

TEST_CASE("betti number and path counts") {
  CHECK(betti_number(load_fixture("T0")) == 0);
  CHECK(betti_number(load_fixture("F2")) == 2);
  CHECK(betti_number(load_fixture("F4")) == 2);
  CHECK(component_count(load_fixture("F4")) == 1);

  auto f2 = load_fixture("F2");
  auto f1 = load_fixture("F1");
  CHECK(dim_between(f2, "2", "3") == 2);
  CHECK(dim_between(f1, "2", "7") == 1);
  CHECK(oracle::count_between(f1, f1.quiver().vertex_id("2"), f1.quiver().vertex_id("7")) == 1);
  CHECK(dim_between(load_fixture("T0"), "2", "2") == 1);
  CHECK_THROWS_AS(dim_between(f1, "2", "nowhere"), PresentationError);

  SUBCASE("relabeling leaves the Betti number unchanged") {
    auto text = fixture("F1").text;
    std::string renamed;
    for (std::size_t i = 0; i < text.size(); ++i)
      renamed += i > 0 && text[i - 1] == ' ' && text[i] == 'a' ? 'z' : text[i];
    auto p = parse_presentation(renamed);
    CHECK(betti_number(p) == betti_number(f1));
  }
}

TEST_CASE("fingerprints and equality") {
  auto a = load_fixture("F1");
  auto b = load_fixture("F1");
  CHECK(a == b);
  CHECK(a.fingerprint() == b.fingerprint());
  CHECK_FALSE(a == load_fixture("F2"));
}
