#include "domains.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "lp.hpp"

namespace sd {

ZVec domain_boundary(const CurveComplex& cx, const ComplexGeometry& geo, const ZVec& D) {
  ZVec b(c1_dimension(cx), Int(0));
  for (ArcId a = 0; a < cx.num_arcs(); ++a)
    b[a] = D[geo.side_region(a, Side::Left)] - D[geo.side_region(a, Side::Right)];
  for (CircleId c = 0; c < cx.num_circles(); ++c)
    if (cx.circles[c].is_free())
      b[free_circle_slot(cx, c)] = D[geo.free_side[c][0]] - D[geo.free_side[c][1]];
  return b;
}

std::vector<ZVec> periodic_lattice(const CurveComplex& cx) {
  ComplexGeometry geo = geometry(cx);
  std::vector<ZVec> rows;
  const int R = cx.num_regions();
  auto arc_row = [&](ArcId a) {
    ZVec r(R, Int(0));
    r[geo.side_region(a, Side::Left)] += 1;
    r[geo.side_region(a, Side::Right)] -= 1;
    return r;
  };
  for (const Circle& c : cx.circles) {
    for (size_t t = 1; t < c.arcs.size(); ++t) {
      ZVec r = arc_row(c.arcs[t]);
      ZVec r0 = arc_row(c.arcs[0]);
      for (int i = 0; i < R; ++i) r[i] -= r0[i];
      rows.push_back(std::move(r));
    }
  }
  if (rows.empty()) { // no constraints: every domain is periodic
    std::vector<ZVec> basis;
    for (int i = 0; i < R; ++i) {
      ZVec e(R, Int(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return kernel_basis(ZMatrix::from_rows(rows, R));
}

ZVec periodic_multiplicities(const CurveComplex& cx, const ComplexGeometry& geo, const ZVec& D) {
  ZVec out(cx.num_circles(), Int(0));
  for (CircleId c = 0; c < cx.num_circles(); ++c) {
    const Circle& circ = cx.circles[c];
    Int m;
    if (circ.is_free()) {
      m = D[geo.free_side[c][0]] - D[geo.free_side[c][1]];
    } else {
      bool first = true;
      for (ArcId a : circ.arcs) {
        Int v = D[geo.side_region(a, Side::Left)] - D[geo.side_region(a, Side::Right)];
        if (first) { m = v; first = false; }
        else if (v != m) throw std::invalid_argument("domain is not periodic");
      }
    }
    out[c] = m;
  }
  return out;
}

DomainSystem domain_system(const CurveComplex& cx) {
  DomainSystem sys;
  sys.cx = &cx;
  sys.geo = geometry(cx);
  const int V = cx.num_vertices();
  const int R = cx.num_regions();
  sys.row_of.assign(V, {-1, -1});
  sys.circles_at.assign(V, {-1, -1});

  std::vector<ZVec> rows;
  for (VertexId v = 0; v < V; ++v) {
    const auto& ends = cx.vertices[v].ends;
    for (int slot = 0; slot < 2; ++slot) {
      ArcId a_in = -1, a_out = -1;
      for (int q = slot; q < 4; q += 2) {
        if (ends[q].kind == EndKind::Head) a_in = ends[q].arc;
        else a_out = ends[q].arc;
      }
      sys.circles_at[v][slot] = cx.arcs[a_in].circle;
      sys.row_of[v][slot] = static_cast<int>(rows.size());
      ZVec r(R, Int(0));
      r[sys.geo.side_region(a_in, Side::Left)] += 1;
      r[sys.geo.side_region(a_in, Side::Right)] -= 1;
      r[sys.geo.side_region(a_out, Side::Left)] -= 1;
      r[sys.geo.side_region(a_out, Side::Right)] += 1;
      rows.push_back(std::move(r));
    }
  }
  sys.A = ZMatrix::from_rows(rows, R);
  sys.snf = smith_normal_form(sys.A);
  return sys;
}

LinearSolution DomainSystem::solve(const ZVec& charges) const {
  return solve_presolved(snf, A.rows, A.cols, charges);
}

namespace {

// index i such that g.perm[i] == j
int entry_on_second(const Generator& g, int j) {
  for (size_t i = 0; i < g.perm.size(); ++i)
    if (g.perm[i] == j) return static_cast<int>(i);
  throw std::invalid_argument("generator permutation is not a bijection");
}

} // namespace

ZVec corner_charges(const MultiDiagram& d, const DomainSystem& sys,
                    const std::vector<Generator>& corners) {
  const int N = d.copies;
  const int n = static_cast<int>(corners.size()) - 1;
  if (n < 1) throw std::invalid_argument("corner list needs at least one input and the output");
  const int k = d.k();

  ZVec q(sys.A.rows, Int(0));
  auto add = [&](VertexId v, CircleId c, int sign) {
    int slot = sys.circles_at[v][0] == c ? 0 : 1;
    if (sys.circles_at[v][slot] != c)
      throw std::invalid_argument("corner entry does not lie on its circle");
    q[sys.row_of[v][slot]] += sign;
  };

  if (n == 1) {
    // strip between any two families: idle families keep zero charges
    const Generator& x = corners[0];
    const Generator& y = corners[1];
    if (x.family_a != y.family_a || x.family_b != y.family_b)
      throw std::invalid_argument("strip corners on different family pairs");
    for (int i = 0; i < k; ++i) {
      CircleId cb = d.merged_circle(i, x.family_a);
      add(x.entries[i], cb, +1);
      add(y.entries[i], cb, -1);
      CircleId ca = d.merged_circle(i, x.family_b);
      add(y.entries[entry_on_second(y, i)], ca, +1);
      add(x.entries[entry_on_second(x, i)], ca, -1);
    }
    return q;
  }

  if (n + 1 != N)
    throw std::invalid_argument("corner count does not match the number of families");
  for (int l = 0; l < n; ++l)
    if (corners[l].family_a != l + 1 || corners[l].family_b != l + 2)
      throw std::invalid_argument("input corner on the wrong family pair");
  const Generator& y = corners[n];
  if (y.family_a != 1 || y.family_b != N)
    throw std::invalid_argument("output corner on the wrong family pair");

  for (int level = 1; level <= N; ++level)
    for (int i = 0; i < k; ++i) {
      CircleId c = d.merged_circle(i, level);
      VertexId next_v, prev_v;
      if (level < N) next_v = corners[level - 1].entries[i]; // x^level, first family
      else next_v = y.entries[entry_on_second(y, i)];
      if (level > 1) prev_v = corners[level - 2].entries[entry_on_second(corners[level - 2], i)];
      else prev_v = y.entries[i];
      add(next_v, c, +1);
      add(prev_v, c, -1);
    }
  return q;
}

std::optional<DomainSolution> solve_domains(const MultiDiagram& d, const DomainSystem& sys,
                                            const std::vector<Generator>& corners) {
  ZVec q = corner_charges(d, sys, corners);
  LinearSolution s = sys.solve(q);
  if (!s.solvable) return std::nullopt;
  DomainSolution out;
  out.particular = std::move(s.particular);
  out.lattice = std::move(s.kernel);
  return out;
}

std::vector<ZVec> thin_subgroup(const MultiDiagram& d) {
  if (d.copies != 2)
    throw std::invalid_argument("thin subgroup requires an (original, pushoff) pair");
  const CurveComplex& m = d.merged;
  ComplexGeometry geo = geometry(m);
  const int R = m.num_regions();
  std::vector<ZVec> rows;
  // periodic conditions
  auto arc_mult = [&](ArcId a, ZVec& r, int sign) {
    r[geo.side_region(a, Side::Left)] += sign;
    r[geo.side_region(a, Side::Right)] -= sign;
  };
  for (const Circle& c : m.circles)
    for (size_t t = 1; t < c.arcs.size(); ++t) {
      ZVec r(R, Int(0));
      arc_mult(c.arcs[t], r, +1);
      arc_mult(c.arcs[0], r, -1);
      rows.push_back(std::move(r));
    }
  // support conditions
  for (RegionId r = 0; r < R; ++r)
    if (d.region_prov[r].kind != RegionProvenance::Kind::Thin) {
      ZVec row(R, Int(0));
      row[r] = 1;
      rows.push_back(std::move(row));
    }
  return kernel_basis(ZMatrix::from_rows(rows, R));
}

bool is_thin(const MultiDiagram& d, const ZVec& D) {
  for (RegionId r = 0; r < d.merged.num_regions(); ++r)
    if (D[r] != 0 && d.region_prov[r].kind != RegionProvenance::Kind::Thin) return false;
  try {
    periodic_multiplicities(d.merged, geometry(d.merged), D);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

ZVec p_map(const MultiDiagram& d, const ZVec& q) {
  if (d.copies != 2) throw std::invalid_argument("p map requires a doubled diagram");
  const CurveComplex& m = d.merged;
  ComplexGeometry mgeo = geometry(m);
  periodic_multiplicities(m, mgeo, q); // throws when not periodic

  const CurveComplex& base = d.base;
  ZVec base_chain(base.num_regions(), Int(0));
  for (RegionId r = 0; r < m.num_regions(); ++r)
    if (d.region_prov[r].kind == RegionProvenance::Kind::Base)
      base_chain[d.region_prov[r].base_region] += q[r];
  return base_chain;
}

ZVec p_multiplicities(const MultiDiagram& d, const ZVec& q) {
  const CurveComplex& base = d.base;
  ComplexGeometry bgeo = geometry(base);
  ZVec out = periodic_multiplicities(base, bgeo, p_map(d, q));

  // sanity: the multiplicity vector is a relation among the circle classes
  H1Presentation h1 = h1_basis(base);
  ZVec total(h1.free_rank, Int(0));
  for (CircleId c = 0; c < base.num_circles(); ++c) {
    ZVec cls = circle_class(base, h1, c);
    for (int t = 0; t < h1.free_rank; ++t) total[t] += out[c] * cls[t];
  }
  for (const Int& v : total)
    if (v != 0) throw std::logic_error("p map image is not a kernel vector");
  return out;
}

std::optional<ZVec> p_preimage(const MultiDiagram& d, const ZVec& target) {
  std::vector<ZVec> basis = periodic_lattice(d.merged);
  const int k = d.k();
  ZMatrix M(k, static_cast<int>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) {
    ZVec img = p_multiplicities(d, basis[j]);
    for (int i = 0; i < k; ++i) M.at(i, static_cast<int>(j)) = img[i];
  }
  LinearSolution s = solve_integer(M, target);
  if (!s.solvable) return std::nullopt;
  ZVec out(d.merged.num_regions(), Int(0));
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t r = 0; r < out.size(); ++r) out[r] += s.particular[j] * basis[j][r];
  return out;
}

Int euler_measure4(const CurveComplex& cx, const ComplexGeometry& geo, const ZVec& D) {
  Int e = 0;
  for (RegionId r = 0; r < cx.num_regions(); ++r)
    if (D[r] != 0) e += D[r] * (4 * cx.regions[r].euler() - geo.region_corners[r]);
  return e;
}

Int point_measure4(const CurveComplex& cx, const ComplexGeometry& geo, const ZVec& D,
                   VertexId v) {
  (void)cx;
  Int s = 0;
  for (int q = 0; q < 4; ++q) s += D[geo.sector_region[v][q]];
  return s;
}

Int polygon_index(int n, int k, const Int& chi_source, const Int& e4) {
  if (n < 1) throw std::invalid_argument("polygon index needs n >= 1");
  Int ind4 = Int(2) * (3 - n) * k - 4 * chi_source + 2 * e4;
  if (ind4 % 4 != 0) throw std::invalid_argument("non-integral index");
  return ind4 / 4;
}

Int index_shift_by_sigma(int g, int k, const Int& m) { return Int(2) * m * (1 - g + k); }

Int index_extended(const CurveComplex& cx, const ComplexGeometry& geo, const ZVec& D,
                   const Int& chi_source, int n, int k, int g) {
  Int least = 0;
  for (const Int& v : D) least = std::min(least, v);
  Int m = least < 0 ? -least : Int(0);
  if (m == 0) return polygon_index(n, k, chi_source, euler_measure4(cx, geo, D));
  ZVec shifted = D;
  for (auto& v : shifted) v += m;
  Int chi_shifted = chi_source + m * (2 - 2 * g) - 2 * m * k;
  Int ind = polygon_index(n, k, chi_shifted, euler_measure4(cx, geo, shifted));
  return ind - index_shift_by_sigma(g, k, m);
}

AdmissibilityReport lattice_admissibility(const std::vector<ZVec>& lattice_basis, int dim) {
  AdmissibilityReport rep;
  SignAlternative alt = one_signed_alternative(lattice_basis, dim);
  if (alt.has_one_signed) {
    rep.admissible = false;
    rep.witness = alt.one_signed;
  } else {
    rep.admissible = true;
    rep.certificate = alt.certificate;
  }
  return rep;
}

AdmissibilityReport is_admissible(const CurveComplex& cx) {
  return lattice_admissibility(periodic_lattice(cx), cx.num_regions());
}

PositiveEnumeration enumerate_positive(const ZVec& particular, const std::vector<ZVec>& lattice,
                                       const Int& bound) {
  const int R = static_cast<int>(particular.size());
  PositiveEnumeration out;
  if (bound < 0) return out;
  HermiteLattice h = hermite_lattice(lattice, R);

  ZVec cur = particular;
  auto emit = [&]() {
    Int sum = 0;
    for (const Int& v : cur) {
      if (v < 0) return;
      sum += v;
    }
    if (sum <= bound) out.domains.push_back(cur);
  };
  auto rec = [&](auto&& self, int row) -> void {
    if (row == h.rank()) { emit(); return; }
    int p = h.pivot_col[row];
    const Int& step = h.rows[row][p];
    // final value of coordinate p is fixed by this coefficient
    Int lo = -cur[p], hi = bound - cur[p];
    // ceil(lo/step), floor(hi/step)
    Int ylo = lo >= 0 ? Int((lo + step - 1) / step) : Int(-Int(Int(-lo) / step));
    Int yhi = hi >= 0 ? Int(hi / step) : Int(-Int(Int(Int(-hi) + step - 1) / step));
    for (Int y = ylo; y <= yhi; ++y) {
      if (y != 0)
        for (int c = 0; c < R; ++c) cur[c] += y * h.rows[row][c];
      self(self, row + 1);
      if (y != 0)
        for (int c = 0; c < R; ++c) cur[c] -= y * h.rows[row][c];
    }
  };
  rec(rec, 0);
  std::sort(out.domains.begin(), out.domains.end());

  AdmissibilityReport adm = lattice_admissibility(lattice, R);
  if (adm.admissible) {
    Rat total(0);
    Rat wmin = adm.certificate.empty() ? Rat(1) : adm.certificate[0];
    for (int i = 0; i < R; ++i) {
      total += adm.certificate[i] * Rat(particular[i]);
      wmin = std::min(wmin, adm.certificate[i]);
    }
    Rat db = total / wmin;
    Int derived = db.numerator() >= 0 ? db.numerator() / db.denominator() : Int(0);
    out.derived_bound = derived;
    if (bound >= derived) out.complete = true;
  }
  return out;
}

} // namespace sd
