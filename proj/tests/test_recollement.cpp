#include "doctest.h"

#include <algorithm>

#include "gentle/format.hpp"
#include "gentle/recollement.hpp"

using namespace gentle;

namespace {

DimensionVector dv(const Presentation& p, std::initializer_list<const char*> labels) {
  DimensionVector out;
  for (const char* l : labels) ++out[p.quiver().vertex_id(l)];
  return out;
}

std::vector<std::string> vertex_labels(const Presentation& p, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(p.quiver().vertex_label(v));
  return out;
}

IndexedSite at(const Presentation& p, std::size_t cycle, const char* t) {
  return site_for(p, cycle, p.quiver().arrow_id(t));
}

Path arrow_path(const Presentation& p, const char* a) {
  return Path::of(p.quiver(), {p.quiver().arrow_id(a)});
}

DimensionVector source_dv(const RecollementSite& s, const StringModule& m) {
  DimensionVector out;
  for (auto [v, n] : m.dimension_vector()) out[s.to_source_vertex(v)] += n;
  return out;
}

}  // namespace

TEST_CASE("idempotent of a site") {
  auto f1 = load_fixture("F1");
  auto c = full_relational_cycles(f1).at(0);
  CHECK(vertex_labels(f1, epsilon_for(f1, c, f1.quiver().arrow_id("a1")).support) ==
        std::vector<std::string>{"3"});
  CHECK(vertex_labels(f1, epsilon_for(f1, c, f1.quiver().arrow_id("a2")).support) ==
        std::vector<std::string>{"1"});
  CHECK_THROWS_AS(epsilon_for(f1, c, f1.quiver().arrow_id("b1")), PresentationError);

  auto f4 = load_fixture("F4");
  auto pentagon = full_relational_cycles(f4).at(1);
  CHECK(vertex_labels(f4, epsilon_for(f4, pentagon, f4.quiver().arrow_id("b1")).support) ==
        std::vector<std::string>{"3'", "4'", "5'"});

  std::vector<std::string> v{"1", "2"};
  std::vector<RawArrow> a{{"x", "1", "2"}, {"y", "2", "1"}};
  std::vector<RawRelation> r{{"x", "y"}, {"y", "x"}};
  auto two = Presentation::build(v, a, r);
  CHECK_THROWS_AS(epsilon_for(two, full_relational_cycles(two).at(0), 0), PresentationError);
}

TEST_CASE("quotient at the first F1 site") {
  auto f1 = load_fixture("F1");
  auto s = at(f1, 0, "a1");
  const auto& bar = s.site.quotient();
  CHECK(bar.vertex_count() == 8);
  CHECK(bar.arrow_count() == 8);
  std::vector<std::string> rels;
  for (auto [x, y] : bar.relations())
    rels.push_back(bar.quiver().arrow(x).label + bar.quiver().arrow(y).label);
  std::ranges::sort(rels);
  CHECK(rels == std::vector<std::string>{"b1c1", "b2c2", "d2b1", "d3b2"});
  CHECK(validate_gentle(bar).ok());
  CHECK_FALSE(s.site.to_quotient_vertex(f1.quiver().vertex_id("3")).has_value());
  CHECK_FALSE(s.site.to_quotient_arrow(f1.quiver().arrow_id("a2")).has_value());
  CHECK(corner_dimension(s.site) == 1);

  auto img = image_module(arrow_path(f1, "a1"), s.site);
  REQUIRE(img.has_value());
  CHECK(word_string(bar, img->word()) == "c2 d2");
  CHECK(iso(*img, projective_module(bar, bar.quiver().vertex_id("2"))));
}

TEST_CASE("site enumeration") {
  CHECK(enumerate_sites(load_fixture("F1")).size() == 3);
  CHECK(enumerate_sites(load_fixture("F3")).size() == 6);
  CHECK(enumerate_sites(load_fixture("F4")).size() == 8);
  CHECK(enumerate_sites(load_fixture("T0")).empty());

  auto f4 = load_fixture("F4");
  CHECK(corner_dimension(at(f4, 1, "b1").site) == 5);
  CHECK_THROWS_AS(at(f4, 2, "a1"), PresentationError);
  CHECK_THROWS_AS(at(f4, 0, "b1"), PresentationError);

  for (const auto& fx : fixtures()) {
    auto p = parse_presentation(fx.text);
    for (const auto& s : enumerate_sites(p)) {
      CHECK(validate_gentle(s.site.quotient()).ok());
      CHECK(s.site.quotient().vertex_count() + s.site.idempotent().support.size() ==
            p.vertex_count());
    }
  }
}

TEST_CASE("restriction dimensions") {
  auto f1 = load_fixture("F1");
  auto eps = at(f1, 0, "a1").site.idempotent();
  std::vector<std::size_t> got;
  for (const auto& e : ind_gproj_nonproj(f1)) got.push_back(res_dim(e.module, eps).total);
  CHECK(got == std::vector<std::size_t>{0, 1, 0});

  auto f2 = load_fixture("F2");
  auto s2 = at(f2, 0, "a1");
  auto r = res_dim(arrow_module(f2, f2.quiver().arrow_id("a1")), s2.site.idempotent());
  CHECK(r.total == 2);
  CHECK(r.per_vertex.size() == 2);
}

TEST_CASE("images and tensors on F3") {
  auto f3 = load_fixture("F3");
  auto s = at(f3, 0, "a1");
  const auto& bar = s.site.quotient();
  const auto& qb = bar.quiver();

  auto img = [&](const char* a) { return image_module(arrow_path(f3, a), s.site); };
  REQUIRE(img("b1"));
  CHECK(iso(*img("b1"), simple_module(bar, qb.vertex_id("2'"))));
  REQUIRE(img("b2"));
  CHECK(iso(*img("b2"), simple_module(bar, qb.vertex_id("3'"))));
  REQUIRE(img("b3"));
  CHECK(img("b3")->dimension_vector() == DimensionVector{{qb.vertex_id("1"), 1}, {qb.vertex_id("2"), 1}});
  REQUIRE(img("a1"));
  CHECK(iso(*img("a1"), projective_module(bar, qb.vertex_id("2"))));
  CHECK(iso(*img("a1"), simple_module(bar, qb.vertex_id("2"))));
  CHECK_FALSE(img("a2"));
  CHECK_FALSE(img("a3"));

  for (const char* a : {"b1", "b2", "b3", "a1"}) CHECK(is_gprojective(bar, *img(a)));

  auto a3 = arrow_module(f3, f3.quiver().arrow_id("a3"));
  auto t = tensor_quotient(a3, s.site);
  REQUIRE(t.size() == 1);
  CHECK(source_dv(s.site, t[0]) == dv(f3, {"1", "2'"}));
  CHECK(tensor_quotient(arrow_module(f3, f3.quiver().arrow_id("a2")), s.site).empty());
}

TEST_CASE("tensor on the F4 counterexample") {
  auto f4 = load_fixture("F4");
  auto s = at(f4, 0, "a2");
  auto t = tensor_quotient(arrow_module(f4, f4.quiver().arrow_id("b2")), s.site);
  REQUIRE(t.size() == 1);
  CHECK(source_dv(s.site, t[0]) == dv(f4, {"3'", "3''"}));
  CHECK_FALSE(is_gprojective(s.site.quotient(), t[0]));
}

TEST_CASE("embedding and transport") {
  auto f5 = load_fixture("F5");
  auto s = at(f5, 0, "a3");
  const auto& bar = s.site.quotient();
  auto p1 = projective_module(bar, bar.quiver().vertex_id("1"));
  CHECK(source_dv(s.site, p1) == dv(f5, {"1", "4"}));
  auto up = embed(p1, s.site);
  CHECK(up.dimension_vector() == dv(f5, {"1", "4"}));
  CHECK(to_quotient(up, s.site) == p1);
  CHECK_THROWS_AS(to_quotient(projective_module(f5, f5.quiver().vertex_id("2")), s.site),
                  PresentationError);

  for (VertexId v = 0; v < bar.vertex_count(); ++v) {
    auto m = projective_module(bar, v);
    CHECK(to_quotient(embed(m, s.site), s.site) == m);
  }
}

TEST_CASE("annihilated submodule") {
  auto f1 = load_fixture("F1");
  auto s = at(f1, 0, "a1");
  auto parts = annihilator_submodule(f1, projective_module(f1, f1.quiver().vertex_id("2")),
                                     s.site.idempotent());
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].dimension_vector() == dv(f1, {"6", "7"}));
  CHECK(parts[1].dimension_vector() == dv(f1, {"8", "9"}));

  auto p7 = projective_module(f1, f1.quiver().vertex_id("7"));
  auto whole = annihilator_submodule(f1, p7, s.site.idempotent());
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == p7);
}

TEST_CASE("tensor bookkeeping") {
  for (const auto& fx : fixtures()) {
    auto p = parse_presentation(fx.text);
    CAPTURE(fx.name);
    for (const auto& s : enumerate_sites(p)) {
      for (VertexId v = 0; v < p.vertex_count(); ++v) {
        auto m = projective_module(p, v);
        auto t = tensor_quotient(m, s.site);
        std::vector<std::size_t> seeds;
        const auto& pts = m.point_vertices();
        for (std::size_t i = 0; i < pts.size(); ++i)
          if (s.site.idempotent().contains(pts[i])) seeds.push_back(i);
        std::size_t gone = submodule_generated(action_from_word(p, m), seeds).size();
        CHECK(total_dimension(t) + gone == m.dimension());
        CHECK(res_dim(m, s.site.idempotent()).total <= gone);

        auto img = image_module(Path::trivial(v), s.site);
        if (!s.site.idempotent().contains(v)) {
          REQUIRE(img.has_value());
          REQUIRE(t.size() == 1);
          CHECK(iso(*img, t[0]));
        } else {
          CHECK_FALSE(img.has_value());
          CHECK(t.empty());
        }
      }
    }
  }
}
