#pragma once

#include "curve_complex.hpp"
#include "multidiagram.hpp"
#include "zmatrix.hpp"

namespace sd {

/// Integer H1 of the surface carried by a curve complex, with coordinates for
/// arbitrary 1-cycles supported on the 1-skeleton. C1 is generated by the arcs
/// followed by the crossing-free circles.
struct H1Presentation {
  int dim1 = 0;
  int free_rank = 0; // 2g for a closed oriented surface
  ZMatrix cycle_basis; // dim1 x kappa, columns span the cycle lattice
  ZMatrix change;      // kappa x kappa, from the relation Smith form
  int rel_rank = 0;

  /// Free H1 coordinates of a 1-cycle chain vector; throws if not a cycle.
  ZVec class_of(const ZVec& chain) const;
};

H1Presentation h1_basis(const CurveComplex& cx);

/// Index of each crossing-free circle inside the C1 basis (arcs first).
int c1_dimension(const CurveComplex& cx);
int free_circle_slot(const CurveComplex& cx, CircleId c);

/// The fundamental 1-cycle of circle c as a C1 chain.
ZVec circle_chain(const CurveComplex& cx, CircleId c);
ZVec circle_class(const CurveComplex& cx, const H1Presentation& h1, CircleId c);

/// 1-chain along circle c from one of its vertices to another, following the
/// stored arc order. Empty when from == to.
ZVec chain_between(const CurveComplex& cx, CircleId c, VertexId from, VertexId to);

/// Basis of { a in Z^#circles : sum a_i [c_i] = 0 in H1 }, over the circles of
/// the given family (all circles when family < 0).
std::vector<ZVec> h2x_kernel(const CurveComplex& cx, int family = -1);

/// Canonical representative of a class in H1(Sigma)/span(circle classes).
struct SectorLabel {
  ZVec rep;
  bool zero() const {
    for (const Int& v : rep)
      if (v != 0) return false;
    return true;
  }
  bool operator==(const SectorLabel&) const = default;
  bool operator<(const SectorLabel& o) const { return rep < o.rep; }
};

struct SectorContext {
  H1Presentation h1;
  HermiteLattice span; // lattice spanned by all circle classes
  SectorLabel label(const ZVec& h1_coords) const { return SectorLabel{span.reduce(h1_coords)}; }
};
SectorContext sector_context(const CurveComplex& cx);

/// The connecting 1-cycle of two generators on the same family pair, as a
/// C1 chain on the merged complex: sum over circles of (alpha chain - beta chain).
ZVec connecting_cycle(const MultiDiagram& d, const Generator& x, const Generator& y);

/// epsilon(x, y): class of the connecting cycle in H1/span.
SectorLabel epsilon(const MultiDiagram& d, const SectorContext& sc, const Generator& x,
                    const Generator& y);
SectorLabel epsilon(const MultiDiagram& d, const Generator& x, const Generator& y);

/// Sector of x against a reference generator x0; throws if x0 is not one.
SectorLabel sector_of(const MultiDiagram& d, const SectorContext& sc, const Generator& x,
                      const Generator& x0);

} // namespace sd
