#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "multidiagram.hpp"

using namespace sd;

TEST_CASE("doubling the torus: counts match the hand computation") {
  MultiDiagram d = perturb(fixtures::t2(), 1);
  CHECK(d.copies == 2);
  CHECK(d.merged.num_circles() == 4);
  // 4 grid crossings at the base vertex plus 2 zone crossings per circle
  CHECK(d.merged.num_vertices() == 8);
  CHECK(d.merged.num_arcs() == 16);
  ValidationReport rep = validate(d.merged);
  for (const auto& v : rep.violations) CAPTURE(v);
  CHECK(rep.ok);
  CHECK(rep.chi == 0);
  // one big region (the square) and seven thin cells
  int base = 0, thin = 0;
  for (const auto& p : d.region_prov)
    (p.kind == RegionProvenance::Kind::Base ? base : thin)++;
  CHECK(base == 1);
  CHECK(thin == 7);
}

TEST_CASE("doubling a crossing-free circle on the torus") {
  MultiDiagram d = perturb(fixtures::t2_single(), 1);
  CHECK(d.merged.num_circles() == 2);
  CHECK(d.merged.num_vertices() == 2);
  CHECK(d.merged.num_arcs() == 4);
  CHECK(validate(d.merged).ok);
  int base = 0, thin = 0;
  for (const auto& p : d.region_prov)
    (p.kind == RegionProvenance::Kind::Base ? base : thin)++;
  CHECK(base == 1);
  CHECK(thin == 2); // the two bigons between the copies
}

TEST_CASE("every copy pair crosses exactly twice") {
  for (int n = 1; n <= 2; ++n) {
    MultiDiagram d = perturb(fixtures::g3(), n);
    for (CircleId c = 0; c < d.k(); ++c)
      for (int a = 1; a <= d.copies; ++a)
        for (int b = a + 1; b <= d.copies; ++b)
          CHECK(intersection_points(d, c, a, c, b).size() == 2);
  }
}

TEST_CASE("triple perturbation of G3 validates with unchanged Euler characteristic") {
  MultiDiagram d = perturb(fixtures::g3(), 2);
  CHECK(d.merged.num_circles() == 12);
  ValidationReport rep = validate(d.merged);
  for (const auto& v : rep.violations) CAPTURE(v);
  CHECK(rep.ok);
  CHECK(rep.chi == -4);
}

TEST_CASE("perturbed fixtures all validate") {
  for (const CurveComplex& base :
       {fixtures::t2(), fixtures::t2_single(), fixtures::g3(), fixtures::sphere_bigon(),
        fixtures::separating(), fixtures::parallel_pair()}) {
    for (int n = 1; n <= 2; ++n) {
      MultiDiagram d = perturb(base, n);
      ValidationReport rep = validate(d.merged);
      for (const auto& v : rep.violations) CAPTURE(v);
      CHECK(rep.ok);
      CHECK(rep.chi == 2 - 2L * base.genus);
    }
  }
}

TEST_CASE("generator enumeration") {
  SUBCASE("doubled torus with a single circle: two generators") {
    MultiDiagram d = perturb(fixtures::t2_single(), 1);
    auto gens = enumerate_generators(d, 1, 2);
    CHECK(gens.size() == 2);
    for (const auto& g : gens) {
      CHECK(g.perm == std::vector<int>{0});
      CHECK(g.entries.size() == 1);
    }
  }
  SUBCASE("doubled torus with two circles: five generators") {
    MultiDiagram d = perturb(fixtures::t2(), 1);
    auto gens = enumerate_generators(d, 1, 2);
    CHECK(gens.size() == 5);
  }
  SUBCASE("exhaustive cartesian oracle on doubled G3") {
    MultiDiagram d = perturb(fixtures::g3(), 1);
    auto gens = enumerate_generators(d, 1, 2);
    // independent count: brute force over all permutations of {0..3}
    int k = d.k();
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    long count = 0;
    do {
      long prod = 1;
      for (int i = 0; i < k; ++i)
        prod *= static_cast<long>(intersection_points(d, i, 1, perm[i], 2).size());
      count += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(static_cast<long>(gens.size()) == count);
    CHECK(gens.size() == 36);
  }
  SUBCASE("empty when required intersections are missing") {
    // two parallel circles: no crossings between circle 0 and circle 1 copies,
    // so the only permutations available pair each circle with itself
    MultiDiagram d = perturb(fixtures::parallel_pair(), 1);
    auto gens = enumerate_generators(d, 1, 2);
    CHECK(gens.size() == 4); // 2 points on each of the two pushoff pairs
    for (const auto& g : gens) CHECK(g.perm == std::vector<int>{0, 1});
  }
}

TEST_CASE("reference generators") {
  SUBCASE("doubled G3 has exactly two") {
    MultiDiagram d = perturb(fixtures::g3(), 1);
    auto refs = reference_generators(d, 1, 2);
    REQUIRE(refs.size() == 2);
    // both are genuine generators
    auto all = enumerate_generators(d, 1, 2);
    for (const auto& r : refs)
      CHECK(std::find(all.begin(), all.end(), r) != all.end());
    // one cyclic shift up, one down
    std::set<std::vector<int>> perms;
    for (const auto& r : refs) perms.insert(r.perm);
    CHECK(perms.count(std::vector<int>{1, 2, 3, 0}) == 1);
    CHECK(perms.count(std::vector<int>{3, 0, 1, 2}) == 1);
  }
  SUBCASE("doubled T2 has exactly two") {
    MultiDiagram d = perturb(fixtures::t2(), 1);
    auto refs = reference_generators(d, 1, 2);
    CHECK(refs.size() == 2);
  }
  SUBCASE("k = 1 is rejected") {
    MultiDiagram d = perturb(fixtures::t2_single(), 1);
    CHECK_THROWS(reference_generators(d, 1, 2));
  }
  SUBCASE("missing consecutive intersection is rejected") {
    MultiDiagram d = perturb(fixtures::parallel_pair(), 1);
    CHECK_THROWS(reference_generators(d, 1, 2));
  }
}

TEST_CASE("transport of generators across family pairs") {
  MultiDiagram d = perturb(fixtures::t2_single(), 2); // three copies
  auto g12 = enumerate_generators(d, 1, 2);
  auto g23 = enumerate_generators(d, 2, 3);
  REQUIRE(g12.size() == 2);
  REQUIRE(g23.size() == 2);
  std::set<Generator> image;
  for (const auto& g : g12) {
    Generator t = transport_generator(d, g, 2, 3);
    CHECK(std::find(g23.begin(), g23.end(), t) != g23.end());
    image.insert(t);
    Generator back = transport_generator(d, t, 1, 2);
    CHECK(back == g);
  }
  CHECK(image.size() == g12.size()); // bijection

  MultiDiagram dg = perturb(fixtures::g3(), 2);
  auto a12 = enumerate_generators(dg, 1, 2);
  auto a23 = enumerate_generators(dg, 2, 3);
  REQUIRE(a12.size() == a23.size());
  std::set<Generator> img;
  for (const auto& g : a12) {
    Generator t = transport_generator(dg, g, 2, 3);
    CHECK(std::find(a23.begin(), a23.end(), t) != a23.end());
    Generator back = transport_generator(dg, t, 1, 2);
    CHECK(back == g);
    img.insert(t);
  }
  CHECK(img.size() == a12.size());
}
