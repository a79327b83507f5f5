#pragma once

#include <optional>

#include "homology.hpp"
#include "lp.hpp"
#include "multidiagram.hpp"

namespace sd {

// A domain is an integer coefficient vector over the regions of a complex.

/// Boundary 1-chain of a domain: multiplicity of each arc (and free circle)
/// is the left coefficient minus the right coefficient.
ZVec domain_boundary(const CurveComplex& cx, const ComplexGeometry& geo, const ZVec& D);

/// Basis of the lattice of domains whose boundary is a Z-combination of whole
/// circles. Always contains the all-ones domain.
std::vector<ZVec> periodic_lattice(const CurveComplex& cx);

/// Multiplicity vector (per circle) of a periodic domain's boundary; throws if
/// the domain is not periodic.
ZVec periodic_multiplicities(const CurveComplex& cx, const ComplexGeometry& geo, const ZVec& D);

/// The domain equation system of a diagram: at every vertex, for each of the
/// two circles through it, the boundary of boundary condition. Solutions with
/// zero charges are exactly the periodic domains.
struct DomainSystem {
  const CurveComplex* cx = nullptr;
  ComplexGeometry geo;
  ZMatrix A;           // rows: (vertex, circle-slot); cols: regions
  SmithForm snf;       // factored once
  std::vector<std::array<int, 2>> row_of; // [vertex][slot in {0,1}] -> row
  std::vector<std::array<CircleId, 2>> circles_at; // circles at each vertex

  /// integer solutions of A D = q
  LinearSolution solve(const ZVec& charges) const;
};
DomainSystem domain_system(const CurveComplex& cx);

/// Corner charges for the polygon with inputs x^1..x^n and output y.
/// corners[l] (0-based l = 0..n-1) is the generator on families (l+1, l+2);
/// the last element is y on families (1, n+1).
ZVec corner_charges(const MultiDiagram& d, const DomainSystem& sys,
                    const std::vector<Generator>& corners);

struct DomainSolution {
  ZVec particular;
  std::vector<ZVec> lattice; // homogeneous solutions = periodic domains
};
/// Empty exactly when the epsilon obstruction of the corners is nonzero.
std::optional<DomainSolution> solve_domains(const MultiDiagram& d, const DomainSystem& sys,
                                            const std::vector<Generator>& corners);

/// Periodic domains supported in the regions swept between the copies of the
/// circles (the thin regions). Requires a doubled diagram.
std::vector<ZVec> thin_subgroup(const MultiDiagram& d);
bool is_thin(const MultiDiagram& d, const ZVec& D);

/// Projects out thin regions and reinterprets the rest as a 2-chain on the
/// base regions: a periodic base domain representing the class in H2(X).
/// Its kernel is exactly the thin subgroup.
ZVec p_map(const MultiDiagram& d, const ZVec& q);
/// Boundary multiplicities of p_map(q) over the base circles; always a
/// relation among the circle classes, i.e. a vector of ker(iota_Gamma).
ZVec p_multiplicities(const MultiDiagram& d, const ZVec& q);
/// A periodic merged domain whose p-image has the given boundary
/// multiplicities, when one exists.
std::optional<ZVec> p_preimage(const MultiDiagram& d, const ZVec& target);

/// Euler measure in quarter units: sum of coeff * (4 chi(R) - corners(R)).
Int euler_measure4(const CurveComplex& cx, const ComplexGeometry& geo, const ZVec& D);
/// Local multiplicity at a vertex in quarter units: sum of the four sector
/// coefficients.
Int point_measure4(const CurveComplex& cx, const ComplexGeometry& geo, const ZVec& D, VertexId v);

/// ind = ((3-n)/2) k - chi + 2 e(D), exact; throws on non-integral input.
Int polygon_index(int n, int k, const Int& chi_source, const Int& e4);
/// Index shift from adding m copies of the fiber class: 2 m (1 - g + k).
Int index_shift_by_sigma(int g, int k, const Int& m);
/// Extends the index to domains with negative coefficients by shifting with
/// fiber classes, evaluating, and subtracting the shift.
Int index_extended(const CurveComplex& cx, const ComplexGeometry& geo, const ZVec& D,
                   const Int& chi_source, int n, int k, int g);

struct AdmissibilityReport {
  bool admissible = false;
  ZVec witness;      // one-signed nonzero periodic domain when inadmissible
  RatVec certificate; // positive functional vanishing on the lattice when admissible
};
AdmissibilityReport is_admissible(const CurveComplex& cx);
AdmissibilityReport lattice_admissibility(const std::vector<ZVec>& lattice_basis, int dim);

struct PositiveEnumeration {
  std::vector<ZVec> domains; // sorted
  bool complete = false;     // certified to list every positive element
  Int derived_bound = -1;    // certificate-derived coefficient-sum bound, if any
};
/// All nonnegative domains in particular+lattice with coefficient sum <= bound.
PositiveEnumeration enumerate_positive(const ZVec& particular, const std::vector<ZVec>& lattice,
                                       const Int& bound);

} // namespace sd
