// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// criteria hold. Expected values are exact; no tolerances anywhere.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "algebra_io.hpp"
#include "cli.hpp"
#include "diagram_io.hpp"
#include "domains.hpp"
#include "fixtures.hpp"
#include "homology.hpp"
#include "moves.hpp"

using namespace sd;

namespace {

struct Checker {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

double run_timed(const std::function<void(Checker&)>& body, Checker& c) {
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<CurveComplex> base_fixtures() {
  return {fixtures::t2(),        fixtures::t2_single(),    fixtures::g3(),
          fixtures::sphere_bigon(), fixtures::separating(), fixtures::parallel_pair()};
}

// systematic single-field corruptions of a complex
std::vector<std::pair<std::string, CurveComplex>> corruptions(const CurveComplex& cx) {
  std::vector<std::pair<std::string, CurveComplex>> out;
  auto add = [&](const std::string& name, CurveComplex c) { out.emplace_back(name, std::move(c)); };
  {
    CurveComplex c = cx;
    c.genus += 1;
    add("genus", c);
  }
  for (VertexId v = 0; v < cx.num_vertices(); ++v)
    for (int q = 0; q < 4; ++q) {
      CurveComplex c = cx;
      auto& e = c.vertices[v].ends[q];
      e.kind = e.kind == EndKind::Tail ? EndKind::Head : EndKind::Tail;
      add("vertex end kind", c);
      if (cx.num_arcs() > 1) {
        CurveComplex c2 = cx;
        c2.vertices[v].ends[q].arc = (c2.vertices[v].ends[q].arc + 1) % cx.num_arcs();
        add("vertex end arc", c2);
      }
    }
  for (ArcId a = 0; a < cx.num_arcs(); ++a) {
    if (cx.num_vertices() > 1) {
      CurveComplex c = cx;
      c.arcs[a].from = (c.arcs[a].from + 1) % cx.num_vertices();
      add("arc from", c);
    }
    if (cx.num_circles() > 1) {
      CurveComplex c = cx;
      c.arcs[a].circle = (c.arcs[a].circle + 1) % cx.num_circles();
      add("arc circle", c);
    }
  }
  for (CircleId c0 = 0; c0 < cx.num_circles(); ++c0) {
    if (!cx.circles[c0].arcs.empty()) {
      CurveComplex c = cx;
      c.circles[c0].arcs.pop_back();
      add("circle arc list", c);
    }
    {
      CurveComplex c = cx;
      c.circles[c0].index += 1;
      add("circle index", c);
    }
    if (cx.num_circles() > 1) {
      CurveComplex c = cx;
      c.circles[c0].family += 1;
      add("circle family", c);
    }
  }
  for (RegionId r = 0; r < cx.num_regions(); ++r) {
    {
      CurveComplex c = cx;
      c.regions[r].genus += 1;
      add("region genus", c);
    }
    for (size_t t = 0; t < cx.regions[r].cycles.size(); ++t) {
      {
        CurveComplex c = cx;
        c.regions[r].cycles[t][0].side = opposite(c.regions[r].cycles[t][0].side);
        add("cycle entry side", c);
      }
      if (cx.regions[r].cycles[t].size() > 1) {
        CurveComplex c = cx;
        c.regions[r].cycles[t].pop_back();
        add("cycle entry dropped", c);
      }
      {
        CurveComplex c = cx;
        c.regions[r].cycles.erase(c.regions[r].cycles.begin() + t);
        add("cycle dropped", c);
      }
    }
    for (size_t t = 0; t < cx.regions[r].free_sides.size(); ++t) {
      CurveComplex c = cx;
      c.regions[r].free_sides[t].side = opposite(c.regions[r].free_sides[t].side);
      add("free side flipped", c);
    }
  }
  return out;
}

void fix_parity(const CurveComplex& m, const ComplexGeometry& geo, ZVec& D, int n, int k) {
  auto bad = [&] { return ((Int((3 - n) * k) + euler_measure4(m, geo, D)) % 2) != 0; };
  if (!bad()) return;
  for (RegionId r = 0; r < m.num_regions(); ++r) {
    Int w = 4 * m.regions[r].euler() - geo.region_corners[r];
    if (w % 2 != 0) {
      D[r] += 1;
      return;
    }
  }
}

std::vector<ZVec> brute_positive(const ZVec& particular, const std::vector<ZVec>& lattice,
                                 const Int& bound, int radius) {
  std::vector<ZVec> out;
  const int m = static_cast<int>(lattice.size());
  std::vector<int> y(m, -radius);
  while (true) {
    ZVec D = particular;
    for (int j = 0; j < m; ++j)
      for (size_t r = 0; r < D.size(); ++r) D[r] += y[j] * lattice[j][r];
    Int sum = 0;
    bool good = true;
    for (const Int& v : D) {
      if (v < 0) { good = false; break; }
      sum += v;
    }
    if (good && sum <= bound) out.push_back(D);
    if (m == 0) break;
    int j = 0;
    while (j < m && y[j] == radius) y[j++] = -radius;
    if (j == m) break;
    ++y[j];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::string();
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  bool write_goldens = argc > 1 && std::string(argv[1]) == "--write-goldens";
  int failures = 0;
  auto report = [&](int idx, const std::string& what, Checker& c, double secs, double limit) {
    bool time_ok = limit <= 0 || secs < limit;
    bool pass = c.ok && time_ok;
    if (!pass) ++failures;
    std::cout << "criterion " << idx << (pass ? " PASS " : " FAIL ") << what;
    if (limit > 0) {
      std::ostringstream t;
      t.setf(std::ios::fixed);
      t.precision(2);
      t << " (" << secs << "s < " << limit << "s)";
      std::cout << t.str();
    }
    std::cout << "\n";
    for (const auto& n : c.notes) std::cout << "    - " << n << "\n";
  };

  // 1. Euler/validation suite -----------------------------------------------
  {
    Checker c;
    double secs = run_timed(
        [&](Checker& c) {
          CurveComplex t2 = fixtures::t2();
          CurveComplex g3 = fixtures::g3();
          c.require(validate(t2).ok && validate(t2).chi == 0, "T2 must validate with chi 0");
          c.require(validate(g3).ok && validate(g3).chi == -4, "G3 must validate with chi -4");
          // randomized valid complexes: seeded choices of base, perturbation
          // depth and slides
          std::mt19937 rng(20260810);
          auto bases = base_fixtures();
          int built = 0;
          for (int trial = 0; trial < 6; ++trial) {
            CurveComplex base = bases[rng() % bases.size()];
            int depth = 1 + int(rng() % 2);
            MultiDiagram d = perturb(base, depth);
            ValidationReport rep = validate(d.merged);
            c.require(rep.ok, "randomized perturbed complex must validate");
            c.require(rep.chi == 2 - 2L * base.genus, "randomized complex chi");
            ++built;
          }
          {
            SlidePath p;
            p.steps.push_back(SlideStep{0, 0, 4});
            MoveRecord rec = slide(fixtures::g3(), 0, 2, p);
            c.require(validate(rec.after).ok, "slid complex must validate");
            ++built;
          }
          c.require(built >= 5, "at least five randomized complexes");
          // corruption harness
          int caught = 0, total = 0;
          for (const CurveComplex& base : {fixtures::t2(), fixtures::g3(), fixtures::t2_single()})
            for (auto& [name, bad] : corruptions(base)) {
              ++total;
              if (!validate(bad).ok) ++caught;
              else c.notes.push_back("corruption not caught: " + name);
            }
          c.require(caught == total, "every single-field corruption is caught");
        },
        c);
    report(1, "Euler/validation suite", c, secs, 1.0);
  }

  // 2. Homology suite ---------------------------------------------------------
  {
    Checker c;
    double secs = run_timed(
        [&](Checker& c) {
          for (const CurveComplex& cx : base_fixtures())
            c.require(h1_basis(cx).free_rank == 2 * cx.genus, "H1 rank must be 2g");
          std::mt19937 rng(20240811);
          for (int trial = 0; trial < 200; ++trial) {
            std::uniform_int_distribution<int> dim(1, 12);
            int r = dim(rng), cl = dim(rng);
            std::uniform_int_distribution<int> entry(-9, 9);
            ZMatrix A(r, cl);
            for (int i = 0; i < r; ++i)
              for (int j = 0; j < cl; ++j) A.at(i, j) = entry(rng);
            SmithForm s = smith_normal_form(A);
            c.require(s.U * A * s.V == s.D, "U m V = D exactly");
            Int du = determinant(s.U), dv = determinant(s.V);
            c.require((du == 1 || du == -1) && (dv == 1 || dv == -1), "U, V unimodular");
            int nmin = std::min(r, cl);
            for (int i = 0; i + 1 < nmin; ++i)
              if (s.D.at(i + 1, i + 1) != 0)
                c.require(s.D.at(i, i) != 0 && s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0,
                          "divisibility chain");
          }
        },
        c);
    report(2, "homology suite (2g ranks, 200 exact Smith forms)", c, secs, 0.0);
  }

  // 3. Sector/domain equivalence ---------------------------------------------
  {
    Checker c;
    double secs = run_timed(
        [&](Checker& c) {
          for (const CurveComplex& base : {fixtures::t2(), fixtures::g3()}) {
            MultiDiagram d = perturb(base, 1);
            DomainSystem sys = domain_system(d.merged);
            SectorContext sc = sector_context(d.merged);
            auto gens = enumerate_generators(d, 1, 2);
            int pairs = 0;
            for (const auto& x : gens)
              for (const auto& y : gens) {
                bool eps_zero = epsilon(d, sc, x, y).zero();
                bool solvable = solve_domains(d, sys, {x, y}).has_value();
                if (eps_zero != solvable) {
                  c.require(false, "solvable iff epsilon vanishes");
                  return;
                }
                ++pairs;
              }
            c.require(pairs == static_cast<int>(gens.size() * gens.size()),
                      "exhaustive over all generator pairs");
          }
        },
        c);
    report(3, "sector/domain equivalence, exhaustive on doubled T2 and G3", c, secs, 10.0);
  }

  // 4. Index suite ------------------------------------------------------------
  {
    Checker c;
    double secs = run_timed(
        [&](Checker& c) {
          for (int k = 1; k <= 4; ++k)
            c.require(polygon_index(1, k, k, 0) == 0, "trivial strips have index 0");
          // bigons on the doubled single-circle torus
          {
            MultiDiagram d = perturb(fixtures::t2_single(), 1);
            DomainSystem sys = domain_system(d.merged);
            auto gens = enumerate_generators(d, 1, 2);
            auto sol = solve_domains(d, sys, {gens[0], gens[1]});
            c.require(sol.has_value(), "bigon coset solvable");
            PositiveEnumeration pos = enumerate_positive(sol->particular, sol->lattice, 1);
            c.require(pos.domains.size() == 2, "two bigons");
            for (const ZVec& D : pos.domains) {
              Int e4 = euler_measure4(d.merged, sys.geo, D);
              Int corners = 0;
              for (VertexId v : gens[0].entries) corners += point_measure4(d.merged, sys.geo, D, v);
              for (VertexId v : gens[1].entries) corners += point_measure4(d.merged, sys.geo, D, v);
              Int chi4 = 4 * 1 + e4 - corners; // embedded strip Euler characteristic
              c.require(chi4 % 4 == 0, "strip chi integral");
              c.require(polygon_index(1, 1, chi4 / 4, e4) == 1, "bigon index 1");
              c.require((e4 + corners) % 4 == 0 && (e4 + corners) / 4 == 1,
                        "corner-count oracle gives 1");
            }
          }
          // fiber-class shift on 50 random domains per doubled fixture
          std::mt19937 rng(777);
          for (const CurveComplex& base : {fixtures::t2(), fixtures::g3()}) {
            MultiDiagram d = perturb(base, 1);
            ComplexGeometry geo = geometry(d.merged);
            const int k = base.num_circles(), g = base.genus, n = 1;
            for (int trial = 0; trial < 50; ++trial) {
              ZVec D(d.merged.num_regions());
              std::uniform_int_distribution<int> coef(-5, 5);
              for (auto& v : D) v = coef(rng);
              fix_parity(d.merged, geo, D, n, k);
              Int chi = 0;
              Int a = index_extended(d.merged, geo, D, chi, n, k, g);
              ZVec D1 = D;
              for (auto& v : D1) v += 1;
              Int chi_resolved = chi + (2 - 2 * g) - 2 * k;
              Int b = index_extended(d.merged, geo, D1, chi_resolved, n, k, g);
              c.require(b - a == index_shift_by_sigma(g, k, 1),
                        "extended index shifts by 2(1-g+k)");
            }
          }
          // concatenation additivity: strips composed at a common generator
          {
            MultiDiagram d = perturb(fixtures::t2_single(), 1);
            DomainSystem sys = domain_system(d.merged);
            auto gens = enumerate_generators(d, 1, 2);
            auto s1 = solve_domains(d, sys, {gens[0], gens[1]});
            auto s2 = solve_domains(d, sys, {gens[1], gens[0]});
            c.require(s1 && s2, "composable strips");
            std::mt19937 rng2(11);
            for (int trial = 0; trial < 20; ++trial) {
              auto pick = [&](const DomainSolution& s) {
                ZVec D = s.particular;
                for (const auto& q : s.lattice) {
                  int y = int(rng2() % 5) - 2;
                  for (size_t r = 0; r < D.size(); ++r) D[r] += y * q[r];
                }
                return D;
              };
              ZVec D1 = pick(*s1), D2 = pick(*s2);
              Int e1 = euler_measure4(d.merged, sys.geo, D1);
              Int e2 = euler_measure4(d.merged, sys.geo, D2);
              // choose chi inputs of the right parity for each factor
              Int chi1 = (Int(2 * 1) + e1) % 2 == 0 ? 0 : 1;
              Int chi2 = (Int(2 * 1) + e2) % 2 == 0 ? 0 : 1;
              ZVec D12 = D1;
              for (size_t r = 0; r < D12.size(); ++r) D12[r] += D2[r];
              Int lhs = polygon_index(1, 1, chi1 + chi2 - 1,
                                      euler_measure4(d.merged, sys.geo, D12));
              Int rhs = polygon_index(1, 1, chi1, e1) + polygon_index(1, 1, chi2, e2);
              c.require(lhs == rhs, "strip concatenation additivity");
            }
          }
          // strip into triangle on the tripled diagram
          {
            MultiDiagram d = perturb(fixtures::t2_single(), 2);
            DomainSystem sys = domain_system(d.merged);
            auto g12 = enumerate_generators(d, 1, 2);
            auto g23 = enumerate_generators(d, 2, 3);
            auto g13 = enumerate_generators(d, 1, 3);
            bool found_zero_index_triangle = false;
            for (const auto& x12 : g12)
              for (const auto& x23 : g23)
                for (const auto& y13 : g13) {
                  auto tri = solve_domains(d, sys, {x12, x23, y13});
                  if (!tri) continue;
                  PositiveEnumeration pos = enumerate_positive(tri->particular, tri->lattice, 1);
                  for (const ZVec& T : pos.domains) {
                    Int e4 = euler_measure4(d.merged, sys.geo, T);
                    if (e4 == 1) {
                      // the small triangle: one quarter, index 0 with a disk source
                      c.require(polygon_index(2, 1, 1, e4) == 0, "small triangle index 0");
                      found_zero_index_triangle = true;
                    }
                  }
                  // strip concatenation into a corner of the triangle
                  auto strip = solve_domains(d, sys, {y13, g13[0]});
                  if (strip) {
                    ZVec S = strip->particular;
                    Int es = euler_measure4(d.merged, sys.geo, S);
                    Int et = euler_measure4(d.merged, sys.geo, tri->particular);
                    Int chi_s = (Int(2) + es) % 2 == 0 ? 0 : 1;
                    Int chi_t = (Int(1) + et) % 2 == 0 ? 0 : 1; // (3-2)k = 1
                    ZVec sum = S;
                    for (size_t r = 0; r < sum.size(); ++r) sum[r] += tri->particular[r];
                    Int lhs = polygon_index(2, 1, chi_s + chi_t - 1,
                                            euler_measure4(d.merged, sys.geo, sum));
                    Int rhs = polygon_index(1, 1, chi_s, es) + polygon_index(2, 1, chi_t, et);
                    c.require(lhs == rhs, "strip-into-triangle additivity");
                  }
                }
            c.require(found_zero_index_triangle, "a small triangle with e = 1/4 exists");
          }
        },
        c);
    report(4, "index suite (strips, bigons, fiber shifts, concatenation)", c, secs, 0.0);
  }

  // 5. Admissibility / finiteness ---------------------------------------------
  {
    Checker c;
    double secs = run_timed(
        [&](Checker& c) {
          // admissible lattice fixture with a certificate-derived bound
          ZVec particular = {Int(2), Int(0), Int(1), Int(3)};
          std::vector<ZVec> lattice = {{Int(1), Int(-1), Int(0), Int(0)},
                                       {Int(0), Int(2), Int(-1), Int(-1)}};
          AdmissibilityReport adm = lattice_admissibility(lattice, 4);
          c.require(adm.admissible, "fixture lattice is admissible");
          PositiveEnumeration pos = enumerate_positive(particular, lattice, Int(1000));
          c.require(pos.complete, "enumeration certified complete");
          c.require(pos.derived_bound >= 0, "derived bound exists");
          PositiveEnumeration at = enumerate_positive(particular, lattice, pos.derived_bound);
          auto oracle = brute_positive(particular, lattice, pos.derived_bound * 2, 16);
          c.require(at.domains == oracle, "no new elements at twice the bound");
          // the inadmissible all-ones fixture
          CurveComplex doubled = load_diagram(FIXTURE_DIR "/t2-doubled.sd");
          AdmissibilityReport rep = is_admissible(doubled);
          c.require(!rep.admissible, "doubled T2 is inadmissible");
          bool nonzero = false, onesigned = true;
          for (const Int& v : rep.witness) {
            if (v != 0) nonzero = true;
            if (v < 0) onesigned = false;
          }
          c.require(nonzero && onesigned, "one-signed witness produced");
          ComplexGeometry geo = geometry(doubled);
          try {
            periodic_multiplicities(doubled, geo, rep.witness);
          } catch (...) {
            c.require(false, "witness must be periodic");
          }
        },
        c);
    report(5, "admissibility and bounded finiteness", c, secs, 0.0);
  }

  // 6. p-map suite -------------------------------------------------------------
  {
    Checker c;
    double secs = run_timed(
        [&](Checker& c) {
          for (const CurveComplex& base :
               {fixtures::parallel_pair(), fixtures::g3(), fixtures::sphere_bigon()}) {
            MultiDiagram d = perturb(base, 1);
            auto ker = h2x_kernel(base);
            for (const auto& a : ker) {
              auto pre = p_preimage(d, a);
              c.require(pre.has_value(), "kernel vector has a preimage");
              if (pre) c.require(p_multiplicities(d, *pre) == a, "preimage maps back");
            }
          }
          for (const CurveComplex& base :
               {fixtures::t2(), fixtures::t2_single(), fixtures::g3()}) {
            MultiDiagram d = perturb(base, 1);
            for (const auto& q : thin_subgroup(d)) {
              ZVec img = p_map(d, q);
              for (const Int& v : img) c.require(v == 0, "thin element maps to zero");
            }
          }
        },
        c);
    report(6, "p-map surjectivity and thin kernel, exhaustive on fixtures", c, secs, 0.0);
  }

  // 7. A-infinity engine --------------------------------------------------------
  {
    Checker c;
    double secs = run_timed(
        [&](Checker& c) {
          WeakAInfinityAlgebra zero;
          zero.name = "zero";
          zero.basis = {"a", "b"};
          zero.cap = 4;
          c.require(check_relations(zero, 4).all_pass(), "zero algebra passes to arity 4");
          AlgebraDocument onegen = load_algebras(FIXTURE_DIR "/one-gen.alg");
          c.require(check_relations(*onegen.algebra("onegen"), 4).all_pass(),
                    "one-generator weak algebra passes to arity 4");
          AlgebraDocument bad = load_algebras(FIXTURE_DIR "/bad-m1m0.alg");
          RelationReport rb = check_relations(*bad.algebra("bad"), 2);
          c.require(!rb.by_arity.empty() && rb.by_arity[0] == RelationReport::Status::Fail,
                    "m1(m0) defect detected at level 0");
          AInfMorphism id = identity_morphism(*onegen.algebra("onegen"));
          c.require(check_morphism(id, 3).all_pass(), "identity morphism passes");
          // associativity on 100 random sparse triples to cap 4
          WeakAInfinityAlgebra A = zero, B = zero, C = zero, D = zero;
          B.name = "B";
          C.name = "C";
          D.name = "D";
          std::mt19937 rng(5150);
          auto random_morphism = [&](const WeakAInfinityAlgebra& s, const WeakAInfinityAlgebra& t) {
            AInfMorphism f;
            f.name = "r";
            f.source = &s;
            f.target = &t;
            f.cap = 4;
            for (int nn = 1; nn <= 4; ++nn) {
              Tuple tpl(nn, 0);
              while (true) {
                if (rng() % 2 == 0) {
                  Z2Vec v(t.dim());
                  for (int bb = 0; bb < t.dim(); ++bb)
                    if (rng() % 3 == 0) v.flip(bb);
                  if (!v.is_zero()) f.maps[tpl] = v;
                }
                size_t i = 0;
                while (i < tpl.size() && tpl[i] + 1 == s.dim()) tpl[i++] = 0;
                if (i == tpl.size()) break;
                ++tpl[i];
              }
            }
            return f;
          };
          for (int trial = 0; trial < 100; ++trial) {
            AInfMorphism f = random_morphism(A, B);
            AInfMorphism g = random_morphism(B, C);
            AInfMorphism h = random_morphism(C, D);
            if (compose(h, compose(g, f)).maps != compose(compose(h, g), f).maps) {
              c.require(false, "composition associativity");
              break;
            }
          }
          // H = 0 self homotopy accepted, rejected between distinct morphisms
          AlgebraDocument acyc = load_algebras(FIXTURE_DIR "/acyclic.alg");
          const AInfMorphism* aid = acyc.morphism("id");
          const AInfMorphism* azero = acyc.morphism("zero");
          AInfHomotopy H0;
          H0.name = "0";
          H0.source = aid->source;
          H0.target = aid->target;
          H0.cap = 7;
          c.require(check_homotopy(*aid, *aid, H0, 3).all_pass(), "H = 0 self-homotopy accepted");
          c.require(!check_homotopy(*aid, *azero, H0, 3).all_pass(),
                    "H = 0 rejected between distinct morphisms");
          c.require(check_homotopy(*aid, *azero, *acyc.homotopy("contract"), 3).all_pass(),
                    "hand-checked contraction accepted");
        },
        c);
    report(7, "weak A-infinity engine", c, secs, 30.0);
  }

  // 8. Moves suite ---------------------------------------------------------------
  {
    Checker c;
    double secs = run_timed(
        [&](Checker& c) {
          CurveComplex g3 = fixtures::g3();
          std::vector<std::pair<std::string, SlidePath>> paths;
          {
            SlidePath p;
            p.steps.push_back(SlideStep{0, 0, 4});
            paths.emplace_back("slide 0 over 2 through region 0", p);
          }
          {
            SlidePath p;
            p.steps.push_back(SlideStep{1, 1, 5});
            paths.emplace_back("slide 0 over 2 through region 1", p);
          }
          {
            SlidePath p; // two steps, crossing an arc of circle 1
            p.steps.push_back(SlideStep{0, 0, 2});
            p.steps.push_back(SlideStep{1, 2, 5});
            paths.emplace_back("two-step slide crossing circle 1", p);
          }
          for (auto& [name, p] : paths) {
            MoveRecord rec = slide(g3, 0, 2, p);
            ValidationReport rep = validate(rec.after);
            c.require(rep.ok, name + ": result validates");
            c.require(rec.after.genus == g3.genus && rep.chi == 2 - 2L * g3.genus,
                      name + ": genus and chi preserved");
            CurveComplex back = unslide(rec);
            c.require(isomorphic(back, g3), name + ": reverse slide restores the complex");
            SectorPreservationReport sp = verify_sector_preservation(rec);
            c.require(sp.ok, name + ": sectors preserved");
          }
          for (auto [kidx, lidx] : std::vector<std::pair<int, int>>{{3, 0}, {3, 1}, {3, 2}}) {
            MoveRecord rec = shift_reorder(g3, kidx, lidx);
            c.require(validate(rec.after).ok, "reorder validates");
            SectorPreservationReport sp = verify_sector_preservation(rec);
            c.require(sp.ok, "reorder preserves sectors");
          }
        },
        c);
    report(8, "moves suite (slides, reorders, involution, sectors)", c, secs, 0.0);
  }

  // 9. CLI determinism -------------------------------------------------------------
  {
    Checker c;
    double secs = run_timed(
        [&](Checker& c) {
          const std::string fx = FIXTURE_DIR;
          std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
              {"validate-t2", {"validate", fx + "/t2.sd"}},
              {"validate-g3", {"validate", fx + "/g3.sd"}},
              {"generators-t2", {"generators", fx + "/t2.sd"}},
              {"generators-t2-single", {"generators", fx + "/t2-single.sd"}},
              {"reference-generators-g3", {"reference-generators", fx + "/g3.sd"}},
              {"sectors-g3", {"sectors", fx + "/g3.sd"}},
              {"domains-t2-single", {"domains", fx + "/t2-single.sd", "--from", "0", "--to", "1"}},
              {"periodic-t2-single-doubled", {"periodic", fx + "/t2-single-doubled.sd"}},
              {"admissible-t2-doubled", {"admissible", fx + "/t2-doubled.sd"}},
              {"euler-measure-t2", {"euler-measure", fx + "/t2.sd", "--domain", "1"}},
              {"index", {"index", "-n", "1", "-k", "2", "--chi", "2", "--e4", "0"}},
              {"index-extended-g3",
               {"index-extended", fx + "/g3.sd", "--domain", "-1,-1", "--chi", "0", "-n", "1",
                "-k", "4", "-g", "3"}},
              {"enumerate-positive-t2-single",
               {"enumerate-positive", fx + "/t2-single.sd", "--from", "0", "--to", "1", "--bound",
                "2"}},
              {"thin-t2", {"thin", fx + "/t2.sd"}},
              {"pmap-t2-single", {"pmap", fx + "/t2-single.sd", "--domain", "1,1,1"}},
              {"double-t2", {"double", fx + "/t2.sd"}},
              {"slide-g3", {"slide", fx + "/g3.sd", "-i", "0", "-j", "2", "--path", "0:0:4"}},
              {"reorder-g3", {"reorder", fx + "/g3.sd", "--k-idx", "3", "--l-idx", "0"}},
              {"verify-sectors-reorder-g3",
               {"verify-sectors", fx + "/g3.sd", "--use-reorder", "--k-idx", "3", "--l-idx", "2"}},
              {"ainf-check-one-gen",
               {"ainf-check", fx + "/one-gen.alg", "--algebra", "onegen", "--max-arity", "3"}},
              {"ainf-check-bad",
               {"ainf-check", fx + "/bad-m1m0.alg", "--algebra", "bad", "--max-arity", "2"}},
              {"ainf-morphism-id",
               {"ainf-morphism", fx + "/acyclic.alg", "--morphism", "id", "--up-to", "3"}},
              {"ainf-compose",
               {"ainf-compose", fx + "/acyclic.alg", "--outer", "id", "--inner", "zero"}},
              {"ainf-homotopy",
               {"ainf-homotopy", fx + "/acyclic.alg", "--from", "id", "--to", "zero", "--via",
                "contract", "--up-to", "3"}},
          };
          for (auto& [name, args] : cases) {
            std::ostringstream out1, err1, out2, err2;
            int code1 = run_cli(args, out1, err1);
            int code2 = run_cli(args, out2, err2);
            c.require(code1 == code2 && out1.str() == out2.str(),
                      name + ": two consecutive runs are byte-identical");
            std::string golden_path = std::string(GOLDEN_DIR) + "/" + name + ".txt";
            std::ostringstream wrapped;
            wrapped << "exit " << code1 << "\n" << out1.str();
            if (write_goldens) {
              std::ofstream f(golden_path, std::ios::binary);
              f << wrapped.str();
            } else {
              std::string want = slurp(golden_path);
              if (want != wrapped.str())
                c.require(false, name + ": output differs from the committed golden file");
            }
          }
          // emit golden: the committed fixture bytes are the canonical emission
          c.require(slurp(fx + "/t2.sd") == emit_diagram(fixtures::t2()),
                    "emit(T2) matches the committed golden bytes");
          c.require(slurp(fx + "/g3.sd") == emit_diagram(fixtures::g3()),
                    "emit(G3) matches the committed golden bytes");
        },
        c);
    report(9, write_goldens ? "CLI determinism (goldens rewritten)" : "CLI determinism vs goldens",
           c, secs, 0.0);
  }

  std::cout << (failures == 0 ? "acceptance: ALL CRITERIA PASS" : "acceptance: FAILURES PRESENT")
            << "\n";
  return failures == 0 ? 0 : 1;
}
