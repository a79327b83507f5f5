#pragma once

#include <map>
#include <set>
#include <vector>

#include "curve_complex.hpp"

namespace sd {

/// Where a merged vertex came from.
struct MdVertexInfo {
  enum class Kind { Grid, Zone };
  Kind kind = Kind::Grid;
  // Grid: crossing of two copy strands near a base crossing.
  VertexId base_vertex = -1;
  CircleId base_i = -1, base_j = -1; // circles at slots 0/2 and 1/3 of the base vertex
  int level_i = 0, level_j = 0;      // copy levels of the two strands
  // Zone: self-crossing of two copies of one base circle.
  CircleId base_circle = -1;
  int zone = 0;      // 0 or 1: the two reversal zones
  int step = 0;      // position in the reversal network
  int level_u = 0;   // strand entering at the lower position (crosses leftward)
  int level_w = 0;   // strand entering at the upper position
};

/// Which part of the base surface a merged region occupies.
struct RegionProvenance {
  enum class Kind { Base, Thin };
  Kind kind = Kind::Base;
  RegionId base_region = -1;      // Base: the region it is a shrunken copy of
  std::set<CircleId> circles;     // Thin: base circles whose perturbation sweeps it
};

/// The (n+1)-fold main perturbation of a curve system, as one merged complex.
/// Copy levels run 1..n+1 and double as family tags.
struct MultiDiagram {
  CurveComplex base;
  int copies = 0; // n+1
  CurveComplex merged;
  std::vector<MdVertexInfo> vertex_info;
  std::vector<RegionProvenance> region_prov;

  CircleId merged_circle(CircleId base_c, int level) const;
  /// Grid vertex for (base vertex, level of slot-0/2 strand, level of slot-1/3 strand).
  VertexId grid_vertex(VertexId bv, int level_i, int level_j) const;
  /// Zone crossing of copies {la, lb} of base circle c in the given zone.
  VertexId zone_vertex(CircleId c, int zone, int la, int lb) const;

  int k() const { return base.num_circles(); }

  // lookup tables, filled by perturb
  std::map<std::tuple<VertexId, int, int>, VertexId> grid_index;
  std::map<std::tuple<CircleId, int, int, int>, VertexId> zone_pair_index;
};

/// Builds the main perturbation with n+1 parallel copies, each pair of copies
/// of a circle crossing at exactly two points. Deterministic.
MultiDiagram perturb(const CurveComplex& base, int n);

/// A generator: one intersection point on each circle of family_a paired with
/// a circle of family_b; perm[i] is the family_b index met by circle i.
struct Generator {
  int family_a = 0, family_b = 0;
  std::vector<VertexId> entries;
  std::vector<int> perm;
  bool operator==(const Generator&) const = default;
  bool operator<(const Generator& o) const;
};

std::vector<Generator> enumerate_generators(const MultiDiagram& d, int family_a, int family_b);

/// Generators assembled from copies of chosen points p_i in gamma_i . gamma_{i+1}.
/// Exactly two when consecutive circles meet once.
std::vector<Generator> reference_generators(const MultiDiagram& d, int family_a, int family_b);

/// Carries a generator across overlapping family pairs, e.g. (t1,t2) -> (t2,t3),
/// by the nearest-intersection rule of the perturbation flow.
Generator transport_generator(const MultiDiagram& d, const Generator& x, int to_family_a,
                              int to_family_b);

/// Intersection points of circle a (family fa) with circle b (family fb),
/// in deterministic order.
std::vector<VertexId> intersection_points(const MultiDiagram& d, CircleId base_a, int fa,
                                          CircleId base_b, int fb);

} // namespace sd
