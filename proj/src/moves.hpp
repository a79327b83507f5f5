#pragma once

#include <string>
#include <vector>

#include "curve_complex.hpp"
#include "multidiagram.hpp"

namespace sd {

/// One region traversal of an embedded slide path. The path enters the
/// region through `entry` and leaves through `exit`; the first step's entry
/// arc lies on the sliding circle, the last step's exit arc on the target
/// circle, and interior arcs are crossed transversely once.
struct SlideStep {
  RegionId region = -1;
  ArcId entry = -1;
  ArcId exit = -1;
};

struct SlidePath {
  std::vector<SlideStep> steps;
};

struct MoveRecord {
  enum class Kind { Slide, ShiftReorder };
  Kind kind = Kind::Slide;
  CurveComplex before;
  CurveComplex after;

  // slide data
  CircleId slid = -1;
  CircleId over = -1;
  SlidePath path;
  int sign = 0; // [gamma_i'] = [gamma_i] + sign [gamma_j]
  std::vector<int> region_image; // old region -> principal new region

  // reorder data
  std::vector<int> circle_perm; // old circle id -> new circle id

  // surgery bookkeeping (slides): added vertices in creation order
  std::vector<VertexId> band_vertices;     // u_t, w_t pairs
  std::vector<VertexId> parallel_vertices; // pv's in traversal order
};

/// Replaces circle i by its band sum with circle j along the path. Requires
/// the two circles disjoint and homologically distinct; rejects paths whose
/// combinatorics do not pin the isotopy class (see errors).
MoveRecord slide(const CurveComplex& base, CircleId i, CircleId j, const SlidePath& path);

/// Surgical inverse of a slide: removes the band and the parallel copy from
/// rec.after and regroups regions by the recorded provenance. The result
/// should be isomorphic to rec.before; this is checked by the caller.
CurveComplex unslide(const MoveRecord& rec);

/// Cyclic reindexing: the circle at position k_idx moves to position l_idx+1.
/// With k_idx = k-1 this is the paper's shift reordering.
MoveRecord shift_reorder(const CurveComplex& base, int k_idx, int l_idx);

/// Exact isomorphism of curve complexes: a bijection of vertices, arcs,
/// circles and regions preserving all incidence and rotation data.
bool isomorphic(const CurveComplex& a, const CurveComplex& b);

struct SectorPreservationReport {
  bool ok = false;
  int pairs_checked = 0;
  std::vector<std::string> mismatches;
};

/// Doubles the before/after complexes, carries every before-generator across
/// the move, and checks that the epsilon partition into sectors is preserved.
SectorPreservationReport verify_sector_preservation(const MoveRecord& rec);

} // namespace sd
