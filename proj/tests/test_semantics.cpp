#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "loopq/parse.hpp"
#include "loopq/semantics.hpp"
#include "test_support.hpp"

using namespace loopq;
using testsupport::poly;
using testsupport::to_series;

namespace {

GradedSeries red(const char* text, int n) {
  return reduced_homology(*parse_space(text), n);
}

/* PD expressions the suite uses repeatedly. */
std::vector<const char*> pd_corpus() {
  return {
      "S^7",
      "S^3 x S^4",
      "S^2 x S^2",
      "S^4 x S^4",
      "(S^3 x S^4) # (S^3 x S^4)",
      "(S^2 x S^4) # (S^2 x S^4) # (S^2 x S^4)",
      "(S^2 x S^2) # (S^2 x S^2)",
      "attach(hsmash(S^1, S^3 v S^3), 7)",
      "attach(S^3, 6)",
      "attach(S^3 v S^3 v S^6, 7)",
  };
}

}  // namespace

TEST_CASE("attrs on wedges, half-smashes and products") {
  SpaceAttrs w = attrs(*parse_space("S^3 v S^3"));
  CHECK(w.rationally_spherical);
  CHECK(w.simply_connected);
  REQUIRE(w.generator_count.has_value());
  CHECK(*w.generator_count == 2);

  SpaceAttrs h = attrs(*parse_space("hsmash(S^1, S^3 v S^3)"));
  CHECK(h.rationally_spherical);
  CHECK(h.simply_connected);
  REQUIRE(h.generator_count.has_value());
  CHECK(*h.generator_count == 4);

  SpaceAttrs p = attrs(*parse_space("S^3 x S^4"));
  REQUIRE(p.pd_dim.has_value());
  CHECK(*p.pd_dim == 7);
  CHECK_FALSE(p.rationally_spherical);
  REQUIRE(p.generator_count.has_value());
  CHECK(*p.generator_count == 2);
  CHECK(p.connectivity == 2);
}

TEST_CASE("attrs corner cases") {
  SpaceAttrs pt = attrs(*point());
  CHECK(pt.simply_connected);
  CHECK_FALSE(pt.rationally_spherical);
  CHECK(pt.connectivity == k_contractible_connectivity);
  REQUIRE(pt.generator_count.has_value());
  CHECK(*pt.generator_count == 0);

  /* a point factor drops out of a product */
  SpaceAttrs pp = attrs(*parse_space("pt x S^3"));
  CHECK(pp.rationally_spherical);
  CHECK(*pp.generator_count == 1);
  CHECK(*pp.pd_dim == 3);

  SpaceAttrs s1 = attrs(*sphere(1));
  CHECK_FALSE(s1.simply_connected);
  CHECK_FALSE(s1.rationally_spherical);
  CHECK(s1.connectivity == 0);

  /* suspensions are always spherical; generators counted from homology */
  SpaceAttrs su = attrs(*parse_space("susp(S^2 x S^2)"));
  CHECK(su.rationally_spherical);
  REQUIRE(su.generator_count.has_value());
  CHECK(*su.generator_count == 3);

  /* smash raises connectivity */
  SpaceAttrs sm = attrs(*parse_space("smash(S^1, S^2)"));
  CHECK(sm.simply_connected);
  CHECK(sm.rationally_spherical);
  CHECK(sm.connectivity >= 2);

  /* attach: PD dimension only when the cell clears the inner homology */
  CHECK(attrs(*parse_space("attach(S^3, 6)")).pd_dim == 6);
  CHECK_FALSE(attrs(*parse_space("attach(S^3, 3)")).pd_dim.has_value());
  CHECK_FALSE(attrs(*parse_space("attach(S^2 x S^2, 5)")).generator_count.has_value());

  /* products of PD forms are PD of the summed dimension */
  CHECK(*attrs(*parse_space("S^2 x S^2 x S^2")).pd_dim == 6);
}

TEST_CASE("connected sum validation") {
  CHECK_THROWS_AS(attrs(*parse_space("(S^2 v S^2) # (S^2 x S^2)")),
                  semantic_error);
  CHECK_THROWS_AS(attrs(*parse_space("(S^2 x S^2) # (S^3 x S^3)")),
                  semantic_error);
  SpaceAttrs ok = attrs(*parse_space("(S^2 x S^2) # (S^2 x S^2)"));
  CHECK(*ok.pd_dim == 4);
  CHECK(ok.simply_connected);
}

TEST_CASE("reduced homology rules") {
  CHECK(red("S^3 v S^3", 8) == to_series(poly({{3, 2}}, 8)));
  CHECK(red("hsmash(S^1, S^3 v S^3)", 8) ==
        to_series(poly({{3, 2}, {4, 2}}, 8)));
  CHECK(red("(S^3 x S^4) # (S^3 x S^4)", 10) ==
        to_series(poly({{3, 2}, {4, 2}, {7, 1}}, 10)));
  CHECK(red("S^3 x S^4", 10) == to_series(poly({{3, 1}, {4, 1}, {7, 1}}, 10)));
  CHECK(red("smash(S^2, S^3)", 8) == to_series(poly({{5, 1}}, 8)));
  CHECK(red("susp(S^2 x S^2)", 8) == to_series(poly({{3, 2}, {5, 1}}, 8)));
  CHECK(red("pt", 8) == GradedSeries::zero(8));
  CHECK(red("attach(S^3, 6)", 8) == to_series(poly({{3, 1}, {6, 1}}, 8)));
  /* truncation simply drops high cells */
  CHECK(red("S^3 x S^4", 5) == to_series(poly({{3, 1}, {4, 1}}, 5)));
}

TEST_CASE("skeleton rules") {
  CHECK(equal(*skeleton(*parse_space("S^3 x S^4")), *parse_space("S^3 v S^4")));
  CHECK(equal(*skeleton(*parse_space("(S^3 x S^4) # (S^3 x S^4)")),
              *parse_space("(S^3 v S^4) v (S^3 v S^4)")));
  CHECK(skeleton(*sphere(7))->kind == SpaceKind::point);
  CHECK(equal(*skeleton(*parse_space("attach(S^2 v S^2, 4)")),
              *parse_space("S^2 v S^2")));
  CHECK_THROWS_AS(skeleton(*parse_space("S^2 x S^2 x S^2")), semantic_error);
  CHECK_THROWS_AS(skeleton(*parse_space("S^2 v S^2")), semantic_error);
}

TEST_CASE("PD invariants across the corpus") {
  for (const char* text : pd_corpus()) {
    INFO(text);
    SpaceRef e = parse_space(text);
    const SpaceAttrs at = attrs(*e);
    REQUIRE(at.pd_dim.has_value());
    const int n = *at.pd_dim;
    GradedSeries r = reduced_homology(*e, n + 4);
    CHECK(r[0] == 0);
    CHECK(loopq::nonnegative(r));
    CHECK(r[n] == 1);                      // single top cell
    CHECK(loopq::top_degree(r) == n);      // nothing above it
    CHECK(homological_dimension(*e) == n);
    /* removing and re-attaching the top cell reproduces the homology */
    SpaceRef skel_e = skeleton(*e);
    CHECK(reduced_homology(*attach(skel_e, n), n + 4) == r);
  }
}

TEST_CASE("Poincare duality holds for honest forms and fails for fakes") {
  CHECK(satisfies_poincare_duality(*parse_space("S^3 x S^4")));
  CHECK(satisfies_poincare_duality(*parse_space("(S^3 x S^4) # (S^3 x S^4)")));
  CHECK(satisfies_poincare_duality(*parse_space("attach(S^3, 6)")));
  CHECK(satisfies_poincare_duality(
      *parse_space("attach(hsmash(S^1, S^3 v S^3), 7)")));
  /* a 7-cell on S^3 x S^3 is not dual: H^3 is 2-dimensional, H^4 empty */
  CHECK_FALSE(satisfies_poincare_duality(*parse_space("attach(S^3 x S^3, 7)")));
  CHECK_THROWS_AS(satisfies_poincare_duality(*parse_space("S^2 v S^2")),
                  semantic_error);
}

TEST_CASE("suspension bound") {
  CHECK(check_ganea(*parse_space("S^2 x S^2")));          // 4 <= 4
  CHECK_FALSE(check_ganea(*parse_space("S^2 x S^2 x S^2")));  // 6 > 4
  CHECK(check_ganea(*parse_space("S^3 x S^3")));          // 6 <= 7
  /* (n-1)-connected 2n-dimensional forms always pass */
  for (int half : {2, 3, 4, 5})
    CHECK(check_ganea(*product(sphere(half), sphere(half))));
  CHECK(check_ganea(*parse_space("attach(S^3 x S^3, 7)")));   // 7 <= 7
  CHECK_FALSE(check_ganea(*parse_space("attach(S^2 x S^2, 5)")));  // 5 > 4
  CHECK_THROWS_AS(check_ganea(*parse_space("S^2 v S^2")), semantic_error);
}

TEST_CASE("wedge materialization from a reduced series") {
  GradedSeries r = to_series(poly({{3, 2}, {6, 1}}, 6));
  SpaceRef w = wedge_of_spheres(r);
  CHECK(to_text(*w) == "S^3 v S^3 v S^6");
  CHECK(reduced_homology(*w, 6) == r);
  CHECK(wedge_of_spheres(GradedSeries::zero(4))->kind == SpaceKind::point);
  CHECK_THROWS_AS(wedge_of_spheres(GradedSeries::one(4)), semantic_error);
}

TEST_CASE("spherical skeleton models") {
  auto direct = spherical_skeleton_model(*parse_space("S^3 x S^4"));
  REQUIRE(direct.has_value());
  CHECK_FALSE(direct->via_suspension_bound);
  CHECK(to_text(*direct->space) == "S^3 v S^4");

  auto upgraded = spherical_skeleton_model(*parse_space("attach(S^3 x S^3, 7)"));
  REQUIRE(upgraded.has_value());
  CHECK(upgraded->via_suspension_bound);
  CHECK(to_text(*upgraded->space) == "S^3 v S^3 v S^6");

  CHECK_FALSE(spherical_skeleton_model(*parse_space("attach(S^2 x S^2, 5)"))
                  .has_value());

  auto trivial = spherical_skeleton_model(*sphere(6));
  REQUIRE(trivial.has_value());
  CHECK(trivial->space->kind == SpaceKind::point);
}

TEST_CASE("homological dimension") {
  CHECK(homological_dimension(*parse_space("pt")) == 0);
  CHECK(homological_dimension(*parse_space("pt v pt")) == 0);
  CHECK(homological_dimension(*parse_space("smash(pt, S^3)")) == 0);
  CHECK(homological_dimension(*parse_space("susp(pt)")) == 0);
  CHECK(homological_dimension(*parse_space("hsmash(S^3, pt)")) == 0);
  CHECK(homological_dimension(*parse_space("S^3 x S^4")) == 7);
  CHECK(homological_dimension(*parse_space("hsmash(S^1, S^3 v S^3)")) == 4);
}

TEST_CASE("connectivity bounds are sound for homology") {
  std::mt19937 rng(555);
  const int bound = 12;
  int checked = 0;
  for (int iter = 0; iter < 300; ++iter) {
    SpaceRef e = testsupport::random_space(rng, 3);
    SpaceAttrs at;
    GradedSeries r = GradedSeries::zero(bound);
    try {
      at = attrs(*e);
      r = reduced_homology(*e, bound);
    } catch (const semantic_error&) {
      continue;  // invalid connected sums are rejected elsewhere
    }
    ++checked;
    INFO(to_text(*e));
    CHECK(loopq::nonnegative(r));
    CHECK(r[0] == 0);
    for (int k = 1; k <= std::min(at.connectivity, bound); ++k)
      CHECK(r[k] == 0);
    if (at.rationally_spherical) CHECK(at.simply_connected);
  }
  CHECK(checked > 100);
}
