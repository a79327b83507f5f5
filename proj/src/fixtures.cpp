#include "fixtures.hpp"

namespace sd::fixtures {

namespace {
ArcEnd tail(ArcId a) { return ArcEnd{a, EndKind::Tail}; }
ArcEnd head(ArcId a) { return ArcEnd{a, EndKind::Head}; }
} // namespace

void fill_regions_as_disks(CurveComplex& cx) {
  cx.regions.clear();
  for (const auto& f : trace_faces(cx)) {
    Region r;
    r.genus = 0;
    std::vector<BoundaryEntry> cyc;
    for (const HalfEdge& h : f.cycle)
      cyc.push_back(BoundaryEntry{h.arc, h.forward ? Side::Left : Side::Right});
    r.cycles.push_back(std::move(cyc));
    cx.regions.push_back(std::move(r));
  }
}

CurveComplex t2() {
  CurveComplex cx;
  cx.genus = 1;
  cx.circles.resize(2);
  cx.circles[0] = Circle{0, 0, {0}};
  cx.circles[1] = Circle{1, 0, {1}};
  cx.arcs = {Arc{0, 0, 0}, Arc{1, 0, 0}};
  cx.vertices.resize(1);
  cx.vertices[0].ends = {tail(0), tail(1), head(0), head(1)};
  fill_regions_as_disks(cx);
  return cx;
}

CurveComplex t2_single() {
  CurveComplex cx;
  cx.genus = 1;
  cx.circles = {Circle{0, 0, {}}};
  Region r;
  r.genus = 0;
  r.free_sides = {FreeBoundary{0, Side::Left}, FreeBoundary{0, Side::Right}};
  cx.regions = {r};
  return cx;
}

CurveComplex g3() {
  CurveComplex cx;
  cx.genus = 3;
  const int k = 4;
  cx.circles.resize(k);
  cx.vertices.resize(k);
  cx.arcs.resize(2 * k);
  auto p = [&](int i) { return 2 * ((i % k + k) % k); };
  auto q = [&](int i) { return 2 * ((i % k + k) % k) + 1; };
  for (int i = 0; i < k; ++i) {
    // circle i runs p_i : w_{i-1} -> w_i, then q_i : w_i -> w_{i-1}
    cx.circles[i] = Circle{i, 0, {p(i), q(i)}};
    cx.arcs[p(i)] = Arc{i, (i + k - 1) % k, i};
    cx.arcs[q(i)] = Arc{i, i, (i + k - 1) % k};
    cx.vertices[i].ends = {tail(q(i)), tail(p(i + 1)), head(p(i)), head(q(i + 1))};
  }
  // Complement: two planar regions, each with two boundary cycles.
  Region r0, r1;
  r0.genus = 0;
  r0.cycles = {
      {{p(0), Side::Left}, {p(1), Side::Left}, {p(2), Side::Left}, {p(3), Side::Left}},
      {{q(0), Side::Right}, {q(1), Side::Right}, {q(2), Side::Right}, {q(3), Side::Right}}};
  r1.genus = 0;
  r1.cycles = {
      {{q(0), Side::Left}, {p(3), Side::Right}, {q(2), Side::Left}, {p(1), Side::Right}},
      {{q(1), Side::Left}, {p(0), Side::Right}, {q(3), Side::Left}, {p(2), Side::Right}}};
  cx.regions = {r0, r1};
  return cx;
}

CurveComplex sphere_bigon() {
  CurveComplex cx;
  cx.genus = 0;
  cx.circles.resize(2);
  cx.circles[0] = Circle{0, 0, {0, 1}};
  cx.circles[1] = Circle{1, 0, {2, 3}};
  cx.arcs = {Arc{0, 0, 1}, Arc{0, 1, 0}, Arc{1, 0, 1}, Arc{1, 1, 0}};
  cx.vertices.resize(2);
  cx.vertices[0].ends = {tail(0), tail(2), head(1), head(3)}; // positive crossing
  cx.vertices[1].ends = {tail(1), head(2), head(0), tail(3)}; // negative crossing
  fill_regions_as_disks(cx);
  return cx;
}

CurveComplex separating() {
  CurveComplex cx;
  cx.genus = 2;
  cx.circles = {Circle{0, 0, {}}};
  Region r0, r1;
  r0.genus = 1;
  r0.free_sides = {FreeBoundary{0, Side::Left}};
  r1.genus = 1;
  r1.free_sides = {FreeBoundary{0, Side::Right}};
  cx.regions = {r0, r1};
  return cx;
}

CurveComplex parallel_pair() {
  CurveComplex cx;
  cx.genus = 1;
  cx.circles = {Circle{0, 0, {}}, Circle{1, 0, {}}};
  Region r0, r1;
  r0.genus = 0;
  r0.free_sides = {FreeBoundary{0, Side::Left}, FreeBoundary{1, Side::Right}};
  r1.genus = 0;
  r1.free_sides = {FreeBoundary{1, Side::Left}, FreeBoundary{0, Side::Right}};
  cx.regions = {r0, r1};
  return cx;
}

} // namespace sd::fixtures
