#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ints.hpp"
#include "zmatrix.hpp"

namespace sd {

using VertexId = int;
using ArcId = int;
using RegionId = int;
using CircleId = int;

enum class EndKind { Tail, Head }; // Tail: the arc leaves the vertex here

struct ArcEnd {
  ArcId arc = -1;
  EndKind kind = EndKind::Tail;
  bool operator==(const ArcEnd&) const = default;
};

enum class Side { Left, Right };
inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

struct Arc {
  CircleId circle = -1;
  VertexId from = -1;
  VertexId to = -1;
};

/// One embedded oriented circle of the system. An empty arc list encodes a
/// circle with no crossings; such a circle appears on region boundaries via
/// free sides instead of boundary cycles.
struct Circle {
  int index = 0;  // position within its family, cyclically indexed
  int family = 0;
  std::vector<ArcId> arcs; // cyclic, orientation-coherent
  bool is_free() const { return arcs.empty(); }
};

/// Transverse double point: four arc ends in counterclockwise order.
struct Vertex {
  std::array<ArcEnd, 4> ends;
};

struct BoundaryEntry {
  ArcId arc = -1;
  Side side = Side::Left; // Left: arc traversed forward with the region on its left
  bool operator==(const BoundaryEntry&) const = default;
};

struct FreeBoundary {
  CircleId circle = -1;
  Side side = Side::Left;
};

struct Region {
  int genus = 0;
  std::vector<std::vector<BoundaryEntry>> cycles;
  std::vector<FreeBoundary> free_sides;
  int boundary_count() const { return static_cast<int>(cycles.size() + free_sides.size()); }
  /// Euler characteristic of the open region: 2 - 2 genus - boundary_count.
  int euler() const { return 2 - 2 * genus - boundary_count(); }
};

struct CurveComplex {
  int genus = 0;
  std::vector<Circle> circles;
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
  std::vector<Region> regions;
  std::optional<ZVec> section_class; // optional user-supplied section-circle class

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arcs() const { return static_cast<int>(arcs.size()); }
  int num_regions() const { return static_cast<int>(regions.size()); }
  int num_circles() const { return static_cast<int>(circles.size()); }

  int num_families() const;
  int circles_per_family() const;                  // k, when uniform across families
  CircleId circle_id(int family, int index) const; // -1 if absent
  long chi() const; // V - E + sum of region Euler characteristics
};

struct ValidationReport {
  bool ok = false;
  long chi = 0;
  std::vector<std::string> violations;
};
ValidationReport validate(const CurveComplex& cx);

/// Signed count of crossings between distinct circles i and j.
int algebraic_intersection(const CurveComplex& cx, CircleId i, CircleId j);

struct DiagramReport {
  bool ok = false;
  std::vector<std::string> failures;
};
/// Checks |#(gamma_i . gamma_{i+1})| = 1 cyclically (and genus >= 3 when strict).
DiagramReport check_surface_diagram(const CurveComplex& cx, bool strict_genus);

// ---- face tracing ----------------------------------------------------------

struct HalfEdge {
  ArcId arc = -1;
  bool forward = true; // region lies to the left of travel
  bool operator==(const HalfEdge&) const = default;
  bool operator<(const HalfEdge& o) const {
    return arc != o.arc ? arc < o.arc : forward < o.forward;
  }
};

struct TracedFace {
  std::vector<HalfEdge> cycle;
  std::vector<std::pair<VertexId, int>> corners; // (vertex, sector slot) per transition
};

/// Faces of the rotation system, each as a boundary cycle with the face on
/// the left of every half-edge. Requires structurally sound vertices/arcs.
std::vector<TracedFace> trace_faces(const CurveComplex& cx);

/// Side/sector lookups for a complex that passed validate().
struct ComplexGeometry {
  std::vector<std::array<RegionId, 2>> arc_side;      // [arc][Left,Right]
  std::vector<std::array<RegionId, 2>> free_side;     // [circle][Left,Right], -1 if not free
  std::vector<std::array<RegionId, 4>> sector_region; // [vertex][sector slot]
  std::vector<int> region_corners;                    // right-angle corners per region
  RegionId side_region(ArcId a, Side s) const { return arc_side[a][s == Side::Left ? 0 : 1]; }
};
ComplexGeometry geometry(const CurveComplex& cx);

/// New complex with circle c reversed; crossing data rewritten accordingly.
CurveComplex reverse_circle(const CurveComplex& cx, CircleId c);

/// Canonical rotation of a boundary cycle, for comparisons.
std::vector<HalfEdge> canonical_cycle(std::vector<HalfEdge> cyc);
HalfEdge entry_half_edge(const BoundaryEntry& e);

} // namespace sd
