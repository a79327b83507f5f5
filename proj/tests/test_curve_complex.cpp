#include "doctest.h"

#include "curve_complex.hpp"
#include "fixtures.hpp"

using namespace sd;

TEST_CASE("torus fixture validates with chi 0") {
  CurveComplex t2 = fixtures::t2();
  ValidationReport rep = validate(t2);
  for (const auto& v : rep.violations) CAPTURE(v);
  CHECK(rep.ok);
  CHECK(rep.chi == 0);
  CHECK(t2.num_vertices() == 1);
  CHECK(t2.num_arcs() == 2);
  CHECK(t2.num_regions() == 1);
  CHECK(t2.regions[0].euler() == 1); // square region is a disk
}

TEST_CASE("corrupted torus is caught") {
  CurveComplex t2 = fixtures::t2();
  SUBCASE("arc endpoint corrupted") {
    t2.vertices[0].ends[0] = ArcEnd{0, EndKind::Head}; // tail slot now claims head
    ValidationReport rep = validate(t2);
    CHECK_FALSE(rep.ok);
    bool found = false;
    for (const auto& v : rep.violations)
      if (v.find("arc endpoint mismatch") != std::string::npos) found = true;
    CHECK(found);
  }
  SUBCASE("wrong genus") {
    t2.genus = 2;
    CHECK_FALSE(validate(t2).ok);
  }
  SUBCASE("boundary side dropped") {
    t2.regions[0].cycles[0].pop_back();
    CHECK_FALSE(validate(t2).ok);
  }
  SUBCASE("region genus corrupted") {
    t2.regions[0].genus = 1;
    CHECK_FALSE(validate(t2).ok);
  }
}

TEST_CASE("genus-3 fixture validates with chi -4") {
  CurveComplex g3 = fixtures::g3();
  ValidationReport rep = validate(g3);
  for (const auto& v : rep.violations) CAPTURE(v);
  CHECK(rep.ok);
  CHECK(rep.chi == -4);
  CHECK(g3.num_vertices() == 4);
  CHECK(g3.num_arcs() == 8);
  CHECK(g3.num_regions() == 2);
}

TEST_CASE("free-circle fixtures validate") {
  CHECK(validate(fixtures::t2_single()).ok);
  CHECK(validate(fixtures::separating()).ok);
  CHECK(validate(fixtures::parallel_pair()).ok);
  CHECK(validate(fixtures::sphere_bigon()).ok);
  CHECK(validate(fixtures::sphere_bigon()).chi == 2);
}

TEST_CASE("algebraic intersection numbers") {
  CurveComplex t2 = fixtures::t2();
  int n = algebraic_intersection(t2, 0, 1);
  CHECK((n == 1 || n == -1));
  CHECK(algebraic_intersection(t2, 1, 0) == -n);
  CHECK_THROWS(algebraic_intersection(t2, 0, 0));

  // two geometric points with canceling signs
  CurveComplex sb = fixtures::sphere_bigon();
  CHECK(algebraic_intersection(sb, 0, 1) == 0);

  // disjoint circles
  CurveComplex pp = fixtures::parallel_pair();
  CHECK(algebraic_intersection(pp, 0, 1) == 0);
}

TEST_CASE("orientation reversal negates crossing signs, keeps validity") {
  for (CurveComplex cx : {fixtures::t2(), fixtures::g3(), fixtures::sphere_bigon()}) {
    REQUIRE(validate(cx).ok);
    for (CircleId c = 0; c < cx.num_circles(); ++c) {
      CurveComplex rev = reverse_circle(cx, c);
      CHECK(validate(rev).ok);
      for (CircleId other = 0; other < cx.num_circles(); ++other) {
        if (other == c) continue;
        CHECK(algebraic_intersection(rev, c, other) == -algebraic_intersection(cx, c, other));
        CHECK(algebraic_intersection(rev, other, c) == -algebraic_intersection(cx, other, c));
      }
    }
  }
}

TEST_CASE("surface diagram check") {
  CurveComplex g3 = fixtures::g3();
  DiagramReport ok = check_surface_diagram(g3, true);
  for (const auto& f : ok.failures) CAPTURE(f);
  CHECK(ok.ok);

  CurveComplex t2 = fixtures::t2();
  DiagramReport strict = check_surface_diagram(t2, true);
  CHECK_FALSE(strict.ok);
  bool genus_fail = false;
  for (const auto& f : strict.failures)
    if (f.find("genus") != std::string::npos) genus_fail = true;
  CHECK(genus_fail);
  CHECK(check_surface_diagram(t2, false).ok);

  // consecutive pair with algebraic intersection 0 fails
  CurveComplex sb = fixtures::sphere_bigon();
  DiagramReport zero = check_surface_diagram(sb, false);
  CHECK_FALSE(zero.ok);
}

TEST_CASE("geometry lookups are consistent") {
  CurveComplex g3 = fixtures::g3();
  ComplexGeometry g = geometry(g3);
  // every arc side and every sector assigned
  for (ArcId a = 0; a < g3.num_arcs(); ++a) {
    CHECK(g.arc_side[a][0] >= 0);
    CHECK(g.arc_side[a][1] >= 0);
  }
  for (VertexId v = 0; v < g3.num_vertices(); ++v)
    for (int s = 0; s < 4; ++s) CHECK(g.sector_region[v][s] >= 0);
  // corners per region: each of the four vertices has four sectors
  int corners = 0;
  for (int c : g.region_corners) corners += c;
  CHECK(corners == 16);
}
