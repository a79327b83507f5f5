#include "homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace sd {

int c1_dimension(const CurveComplex& cx) {
  int f = 0;
  for (const auto& c : cx.circles)
    if (c.is_free()) ++f;
  return cx.num_arcs() + f;
}

int free_circle_slot(const CurveComplex& cx, CircleId c) {
  if (!cx.circles[c].is_free()) throw std::invalid_argument("circle has crossings");
  int f = 0;
  for (CircleId i = 0; i < c; ++i)
    if (cx.circles[i].is_free()) ++f;
  return cx.num_arcs() + f;
}

ZVec H1Presentation::class_of(const ZVec& chain) const {
  if (static_cast<int>(chain.size()) != dim1)
    throw std::invalid_argument("chain has the wrong dimension");
  ZVec padded = chain;
  padded.resize(cycle_basis.rows, Int(0));
  LinearSolution s = solve_integer(cycle_basis, padded);
  if (!s.solvable) throw std::invalid_argument("chain is not a 1-cycle");
  ZVec y = change.mul_vec(s.particular);
  ZVec out;
  for (int i = rel_rank; i < static_cast<int>(y.size()); ++i) out.push_back(y[i]);
  return out;
}

H1Presentation h1_basis(const CurveComplex& cx) {
  {
    ValidationReport rep = validate(cx);
    if (!rep.ok) throw std::invalid_argument("h1_basis: complex is not a closed surface");
  }
  // Cellular model of the surface. Regions may have genus and several
  // boundary circles, so each contributes its own cells: a hub vertex, 2h
  // genus loops and one connector per boundary circle. In the abelianized
  // boundary of the region's 2-cell the genus loops and connectors cancel,
  // leaving the sum of its boundary cycles.
  const int dim1 = c1_dimension(cx);
  const int V = cx.num_vertices();
  const int R = cx.num_regions();
  int nfree = dim1 - cx.num_arcs();

  int ext1 = dim1, ext0 = V + nfree + R;
  std::vector<int> genus_slot(R), conn_slot(R);
  for (RegionId r = 0; r < R; ++r) {
    genus_slot[r] = ext1;
    ext1 += 2 * cx.regions[r].genus;
    conn_slot[r] = ext1;
    ext1 += cx.regions[r].boundary_count();
  }
  auto marker_vertex = [&](CircleId c) { return V + (free_circle_slot(cx, c) - cx.num_arcs()); };
  auto hub_vertex = [&](RegionId r) { return V + nfree + r; };

  ZMatrix d1(ext0, ext1);
  for (ArcId a = 0; a < cx.num_arcs(); ++a) {
    d1.at(cx.arcs[a].to, a) += 1;
    d1.at(cx.arcs[a].from, a) -= 1;
  }
  // free loops and genus loops are closed; connectors run hub -> boundary
  for (RegionId r = 0; r < R; ++r) {
    int slot = conn_slot[r];
    for (const auto& cyc : cx.regions[r].cycles) {
      VertexId base = cx.arcs[cyc.front().arc].from;
      d1.at(base, slot) += 1;
      d1.at(hub_vertex(r), slot) -= 1;
      ++slot;
    }
    for (const auto& f : cx.regions[r].free_sides) {
      d1.at(marker_vertex(f.circle), slot) += 1;
      d1.at(hub_vertex(r), slot) -= 1;
      ++slot;
    }
  }

  std::vector<ZVec> kernel = kernel_basis(d1);
  const int kappa = static_cast<int>(kernel.size());

  H1Presentation h;
  h.dim1 = dim1;
  h.cycle_basis = ZMatrix(ext1, kappa);
  for (int j = 0; j < kappa; ++j)
    for (int i = 0; i < ext1; ++i) h.cycle_basis.at(i, j) = kernel[j][i];

  // boundary C2 -> C1, expressed in cycle coordinates
  ZMatrix rel(kappa, R);
  for (RegionId r = 0; r < R; ++r) {
    ZVec b(ext1, Int(0));
    for (const auto& cyc : cx.regions[r].cycles)
      for (const auto& e : cyc) b[e.arc] += e.side == Side::Left ? 1 : -1;
    for (const auto& f : cx.regions[r].free_sides)
      b[free_circle_slot(cx, f.circle)] += f.side == Side::Left ? 1 : -1;
    LinearSolution s = solve_integer(h.cycle_basis, b);
    if (!s.solvable) throw std::logic_error("region boundary is not a cycle");
    for (int i = 0; i < kappa; ++i) rel.at(i, r) = s.particular[i];
  }

  SmithForm sf = smith_normal_form(rel);
  h.change = sf.U;
  h.rel_rank = sf.rank;
  h.free_rank = kappa - sf.rank;
  for (int i = 0; i < sf.rank; ++i)
    if (sf.D.at(i, i) != 1)
      throw std::logic_error("torsion in H1 of a closed oriented surface");
  return h;
}

ZVec circle_chain(const CurveComplex& cx, CircleId c) {
  ZVec v(c1_dimension(cx), Int(0));
  if (cx.circles[c].is_free())
    v[free_circle_slot(cx, c)] = 1;
  else
    for (ArcId a : cx.circles[c].arcs) v[a] += 1;
  return v;
}

ZVec circle_class(const CurveComplex& cx, const H1Presentation& h1, CircleId c) {
  if (c < 0 || c >= cx.num_circles()) throw std::invalid_argument("bad circle index");
  return h1.class_of(circle_chain(cx, c));
}

ZVec chain_between(const CurveComplex& cx, CircleId c, VertexId from, VertexId to) {
  ZVec v(c1_dimension(cx), Int(0));
  if (from == to) return v;
  const auto& arcs = cx.circles[c].arcs;
  if (arcs.empty()) throw std::invalid_argument("chain_between: crossing-free circle");
  int start = -1;
  for (size_t t = 0; t < arcs.size(); ++t)
    if (cx.arcs[arcs[t]].from == from) { start = static_cast<int>(t); break; }
  if (start < 0) throw std::invalid_argument("chain_between: vertex not on circle");
  for (size_t step = 0; step < arcs.size(); ++step) {
    ArcId a = arcs[(start + step) % arcs.size()];
    v[a] += 1;
    if (cx.arcs[a].to == to) return v;
  }
  throw std::invalid_argument("chain_between: target vertex not on circle");
}

std::vector<ZVec> h2x_kernel(const CurveComplex& cx, int family) {
  H1Presentation h1 = h1_basis(cx);
  std::vector<CircleId> ids;
  for (CircleId c = 0; c < cx.num_circles(); ++c)
    if (family < 0 || cx.circles[c].family == family) ids.push_back(c);
  ZMatrix M(h1.free_rank, static_cast<int>(ids.size()));
  for (size_t j = 0; j < ids.size(); ++j) {
    ZVec cls = circle_class(cx, h1, ids[j]);
    for (int i = 0; i < h1.free_rank; ++i) M.at(i, static_cast<int>(j)) = cls[i];
  }
  return kernel_basis(M);
}

SectorContext sector_context(const CurveComplex& cx) {
  SectorContext sc;
  sc.h1 = h1_basis(cx);
  std::vector<ZVec> gens;
  for (CircleId c = 0; c < cx.num_circles(); ++c)
    gens.push_back(circle_class(cx, sc.h1, c));
  sc.span = hermite_lattice(gens, sc.h1.free_rank);
  return sc;
}

ZVec connecting_cycle(const MultiDiagram& d, const Generator& x, const Generator& y) {
  if (x.family_a != y.family_a || x.family_b != y.family_b)
    throw std::invalid_argument("generators live on different family pairs");
  const int k = d.k();
  const CurveComplex& m = d.merged;
  ZVec chain(c1_dimension(m), Int(0));

  auto add = [&](const ZVec& v, int sign) {
    for (size_t i = 0; i < v.size(); ++i) chain[i] += sign * v[i];
  };
  // beta chains run along the first family
  for (int i = 0; i < k; ++i)
    add(chain_between(m, d.merged_circle(i, x.family_a), x.entries[i], y.entries[i]), -1);
  // alpha chains run along the second family
  std::vector<int> x_on(k, -1), y_on(k, -1);
  for (int i = 0; i < k; ++i) {
    x_on[x.perm[i]] = i;
    y_on[y.perm[i]] = i;
  }
  for (int j = 0; j < k; ++j) {
    if (x_on[j] < 0 || y_on[j] < 0) throw std::invalid_argument("generator permutation invalid");
    add(chain_between(m, d.merged_circle(j, x.family_b), x.entries[x_on[j]], y.entries[y_on[j]]),
        +1);
  }
  return chain;
}

SectorLabel epsilon(const MultiDiagram& d, const SectorContext& sc, const Generator& x,
                    const Generator& y) {
  return sc.label(sc.h1.class_of(connecting_cycle(d, x, y)));
}

SectorLabel epsilon(const MultiDiagram& d, const Generator& x, const Generator& y) {
  SectorContext sc = sector_context(d.merged);
  return epsilon(d, sc, x, y);
}

SectorLabel sector_of(const MultiDiagram& d, const SectorContext& sc, const Generator& x,
                      const Generator& x0) {
  auto refs = reference_generators(d, x0.family_a, x0.family_b);
  if (std::find(refs.begin(), refs.end(), x0) == refs.end())
    throw std::invalid_argument("sector_of: x0 is not a reference generator");
  return epsilon(d, sc, x, x0);
}

} // namespace sd
