#include "curve_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sd {

namespace {

std::string fmt(const char* what, int a, int b = -1, int c = -1) {
  std::ostringstream os;
  os << what << " " << a;
  if (b >= 0) os << " " << b;
  if (c >= 0) os << " " << c;
  return os.str();
}

} // namespace

int CurveComplex::num_families() const {
  std::set<int> fams;
  for (const auto& c : circles) fams.insert(c.family);
  return static_cast<int>(fams.size());
}

int CurveComplex::circles_per_family() const {
  std::map<int, int> count;
  for (const auto& c : circles) count[c.family]++;
  int k = -1;
  for (auto& [f, n] : count) {
    if (k < 0) k = n;
    else if (k != n) throw std::runtime_error("families of unequal size");
  }
  return k < 0 ? 0 : k;
}

CircleId CurveComplex::circle_id(int family, int index) const {
  for (CircleId c = 0; c < num_circles(); ++c)
    if (circles[c].family == family && circles[c].index == index) return c;
  return -1;
}

long CurveComplex::chi() const {
  long x = num_vertices() - num_arcs();
  for (const auto& r : regions) x += r.euler();
  return x;
}

HalfEdge entry_half_edge(const BoundaryEntry& e) {
  return HalfEdge{e.arc, e.side == Side::Left};
}

std::vector<HalfEdge> canonical_cycle(std::vector<HalfEdge> cyc) {
  if (cyc.empty()) return cyc;
  std::vector<HalfEdge> best = cyc;
  for (size_t s = 1; s < cyc.size(); ++s) {
    std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
    if (cyc < best) best = cyc;
  }
  return best;
}

std::vector<TracedFace> trace_faces(const CurveComplex& cx) {
  // locate each arc end in its vertex rotation
  // slot_of[arc][kind] = (vertex, slot)
  const int E = cx.num_arcs();
  std::vector<std::array<std::pair<VertexId, int>, 2>> slot_of(
      E, {std::make_pair(-1, -1), std::make_pair(-1, -1)});
  for (VertexId v = 0; v < cx.num_vertices(); ++v)
    for (int q = 0; q < 4; ++q) {
      const ArcEnd& e = cx.vertices[v].ends[q];
      slot_of[e.arc][e.kind == EndKind::Tail ? 0 : 1] = {v, q};
    }

  auto leave = [&](VertexId v, int slot) -> HalfEdge {
    const ArcEnd& e = cx.vertices[v].ends[slot];
    return HalfEdge{e.arc, e.kind == EndKind::Tail};
  };

  std::vector<std::array<bool, 2>> used(E, {false, false});
  std::vector<TracedFace> out;
  for (int a0 = 0; a0 < E; ++a0)
    for (int dir = 0; dir < 2; ++dir) {
      if (used[a0][dir]) continue;
      TracedFace face;
      HalfEdge h{a0, dir == 1};
      while (true) {
        int idx = h.forward ? 1 : 0;
        if (used[h.arc][idx]) break;
        used[h.arc][idx] = true;
        face.cycle.push_back(h);
        // arrive at the far end of h
        auto [v, slot] = h.forward ? slot_of[h.arc][1] : slot_of[h.arc][0];
        int leave_slot = (slot + 3) % 4; // clockwise neighbour: face stays on the left
        face.corners.emplace_back(v, leave_slot);
        h = leave(v, leave_slot);
      }
      out.push_back(std::move(face));
    }
  return out;
}

ValidationReport validate(const CurveComplex& cx) {
  ValidationReport rep;
  auto bad = [&](const std::string& s) { rep.violations.push_back(s); };

  const int E = cx.num_arcs();
  const int V = cx.num_vertices();

  // arcs reference valid circles/vertices
  for (ArcId a = 0; a < E; ++a) {
    const Arc& arc = cx.arcs[a];
    if (arc.circle < 0 || arc.circle >= cx.num_circles()) bad(fmt("arc with invalid circle", a));
    if (arc.from < 0 || arc.from >= V || arc.to < 0 || arc.to >= V)
      bad(fmt("arc with invalid endpoint", a));
  }
  if (!rep.violations.empty()) return rep;

  // circle closure and ownership
  std::vector<int> owner(E, -1);
  for (CircleId c = 0; c < cx.num_circles(); ++c) {
    const auto& arcs = cx.circles[c].arcs;
    for (size_t t = 0; t < arcs.size(); ++t) {
      ArcId a = arcs[t];
      if (a < 0 || a >= E) { bad(fmt("circle lists invalid arc", c)); continue; }
      if (owner[a] != -1) bad(fmt("arc listed twice", a));
      owner[a] = c;
      if (cx.arcs[a].circle != c) bad(fmt("arc circle mismatch", a, c));
      ArcId b = arcs[(t + 1) % arcs.size()];
      if (b >= 0 && b < E && cx.arcs[a].to != cx.arcs[b].from)
        bad(fmt("circle not orientation-coherent at arc", a));
    }
  }
  for (ArcId a = 0; a < E; ++a)
    if (owner[a] < 0) bad(fmt("arc not listed by any circle", a));

  // vertex rotations: every arc end exactly once, at the right vertex
  std::vector<std::array<int, 2>> seen(E, {0, 0});
  for (VertexId v = 0; v < V; ++v) {
    const auto& ends = cx.vertices[v].ends;
    for (int q = 0; q < 4; ++q) {
      const ArcEnd& e = ends[q];
      if (e.arc < 0 || e.arc >= E) { bad(fmt("vertex end with invalid arc", v, q)); continue; }
      VertexId expect = e.kind == EndKind::Tail ? cx.arcs[e.arc].from : cx.arcs[e.arc].to;
      if (expect != v) bad(fmt("arc endpoint mismatch at vertex", v, e.arc));
      seen[e.arc][e.kind == EndKind::Tail ? 0 : 1]++;
    }
    // alternation: slots 0,2 one circle, slots 1,3 the other, distinct
    auto circ = [&](int q) {
      return (ends[q].arc >= 0 && ends[q].arc < E) ? cx.arcs[ends[q].arc].circle : -1;
    };
    if (circ(0) != circ(2) || circ(1) != circ(3)) bad(fmt("vertex strands not opposite", v));
    if (circ(0) == circ(1)) bad(fmt("vertex with a single circle", v));
    // each strand passes through: one head and one tail per circle
    if (circ(0) == circ(2) && ends[0].kind == ends[2].kind) bad(fmt("strand direction clash", v));
    if (circ(1) == circ(3) && ends[1].kind == ends[3].kind) bad(fmt("strand direction clash", v));
  }
  for (ArcId a = 0; a < E; ++a) {
    if (seen[a][0] != 1) bad(fmt("arc endpoint mismatch: tail of arc", a));
    if (seen[a][1] != 1) bad(fmt("arc endpoint mismatch: head of arc", a));
  }

  // boundary pairing: each arc side once, each free circle side once
  std::vector<std::array<int, 2>> side_count(E, {0, 0});
  std::vector<std::array<int, 2>> free_count(cx.num_circles(), {0, 0});
  for (const Region& r : cx.regions) {
    if (r.genus < 0) bad("region with negative genus");
    for (const auto& cyc : r.cycles) {
      if (cyc.empty()) bad("empty boundary cycle");
      for (const auto& e : cyc) {
        if (e.arc < 0 || e.arc >= E) { bad("boundary entry with invalid arc"); continue; }
        side_count[e.arc][e.side == Side::Left ? 0 : 1]++;
      }
    }
    for (const auto& f : r.free_sides) {
      if (f.circle < 0 || f.circle >= cx.num_circles() || !cx.circles[f.circle].is_free()) {
        bad("free side on a non-free circle");
        continue;
      }
      free_count[f.circle][f.side == Side::Left ? 0 : 1]++;
    }
  }
  for (ArcId a = 0; a < E; ++a) {
    if (side_count[a][0] != 1) bad(fmt("arc left side not referenced exactly once", a));
    if (side_count[a][1] != 1) bad(fmt("arc right side not referenced exactly once", a));
  }
  for (CircleId c = 0; c < cx.num_circles(); ++c)
    if (cx.circles[c].is_free()) {
      if (free_count[c][0] != 1 || free_count[c][1] != 1)
        bad(fmt("free circle sides not referenced exactly once", c));
    } else if (free_count[c][0] + free_count[c][1] != 0) {
      bad(fmt("free side recorded for circle with crossings", c));
    }

  if (!rep.violations.empty()) return rep;

  // stored boundary cycles must agree with the rotation system
  {
    auto faces = trace_faces(cx);
    std::map<std::vector<HalfEdge>, int> traced;
    for (size_t i = 0; i < faces.size(); ++i)
      traced[canonical_cycle(faces[i].cycle)] = 0;
    size_t stored = 0;
    for (const Region& r : cx.regions)
      for (const auto& cyc : r.cycles) {
        ++stored;
        std::vector<HalfEdge> hc;
        for (const auto& e : cyc) hc.push_back(entry_half_edge(e));
        auto it = traced.find(canonical_cycle(hc));
        if (it == traced.end())
          bad("boundary cycle does not match the rotation system");
        else if (++it->second > 1)
          bad("boundary cycle repeated");
      }
    if (stored != faces.size()) bad("region cycles do not cover all faces");
  }

  // circle indices within a family are 0 .. k_f - 1
  {
    std::map<int, std::multiset<int>> fam;
    for (const Circle& c : cx.circles) fam[c.family].insert(c.index);
    for (const auto& [f, idxs] : fam) {
      int expect = 0;
      for (int i : idxs)
        if (i != expect++) {
          bad(fmt("circle indices not cyclically contiguous in family", f));
          break;
        }
    }
  }

  // Euler characteristic, exact
  rep.chi = cx.chi();
  if (rep.chi != 2 - 2L * cx.genus) bad("Euler characteristic inconsistent with genus");

  rep.ok = rep.violations.empty();
  return rep;
}

int algebraic_intersection(const CurveComplex& cx, CircleId i, CircleId j) {
  if (i == j) throw std::invalid_argument("self-intersection number undefined here");
  int total = 0;
  for (VertexId v = 0; v < cx.num_vertices(); ++v) {
    const auto& ends = cx.vertices[v].ends;
    int slot_i = -1, slot_j = -1;
    for (int q = 0; q < 4; ++q) {
      const ArcEnd& e = ends[q];
      if (e.kind != EndKind::Tail) continue;
      CircleId c = cx.arcs[e.arc].circle;
      if (c == i) slot_i = q;
      if (c == j) slot_j = q;
    }
    if (slot_i < 0 || slot_j < 0) continue;
    total += (slot_j == (slot_i + 1) % 4) ? 1 : -1;
  }
  return total;
}

DiagramReport check_surface_diagram(const CurveComplex& cx, bool strict_genus) {
  DiagramReport rep;
  int families = cx.num_families();
  if (families != 1) {
    rep.failures.push_back("surface diagram check expects a single curve family");
    return rep;
  }
  int k = cx.num_circles();
  if (k < 2) {
    rep.failures.push_back("consecutive intersection undefined for k < 2");
  } else {
    for (int i = 0; i < k; ++i) {
      CircleId a = cx.circle_id(cx.circles[0].family, i);
      CircleId b = cx.circle_id(cx.circles[0].family, (i + 1) % k);
      int n = algebraic_intersection(cx, a, b);
      if (n != 1 && n != -1) {
        std::ostringstream os;
        os << "consecutive intersection != +-1 for pair (" << i << "," << (i + 1) % k
           << "): " << n;
        rep.failures.push_back(os.str());
      }
    }
  }
  if (strict_genus && cx.genus < 3) rep.failures.push_back("genus < 3");
  rep.ok = rep.failures.empty();
  return rep;
}

ComplexGeometry geometry(const CurveComplex& cx) {
  ComplexGeometry g;
  g.arc_side.assign(cx.num_arcs(), {-1, -1});
  g.free_side.assign(cx.num_circles(), {-1, -1});
  g.sector_region.assign(cx.num_vertices(), {-1, -1, -1, -1});
  g.region_corners.assign(cx.num_regions(), 0);

  auto faces = trace_faces(cx);
  std::map<std::vector<HalfEdge>, const TracedFace*> by_key;
  for (const auto& f : faces) by_key[canonical_cycle(f.cycle)] = &f;

  for (RegionId r = 0; r < cx.num_regions(); ++r) {
    const Region& reg = cx.regions[r];
    for (const auto& cyc : reg.cycles) {
      g.region_corners[r] += static_cast<int>(cyc.size());
      std::vector<HalfEdge> hc;
      for (const auto& e : cyc) {
        hc.push_back(entry_half_edge(e));
        g.arc_side[e.arc][e.side == Side::Left ? 0 : 1] = r;
      }
      auto it = by_key.find(canonical_cycle(hc));
      if (it == by_key.end()) throw std::logic_error("geometry: cycle not traced");
      for (const auto& [v, slot] : it->second->corners) g.sector_region[v][slot] = r;
    }
    for (const auto& f : reg.free_sides)
      g.free_side[f.circle][f.side == Side::Left ? 0 : 1] = r;
  }
  return g;
}

CurveComplex reverse_circle(const CurveComplex& cx, CircleId c) {
  CurveComplex out = cx;
  std::set<ArcId> mine(out.circles[c].arcs.begin(), out.circles[c].arcs.end());
  std::reverse(out.circles[c].arcs.begin(), out.circles[c].arcs.end());
  for (ArcId a : mine) std::swap(out.arcs[a].from, out.arcs[a].to);
  for (auto& v : out.vertices)
    for (auto& e : v.ends)
      if (mine.count(e.arc))
        e.kind = e.kind == EndKind::Tail ? EndKind::Head : EndKind::Tail;
  for (auto& r : out.regions) {
    for (auto& cyc : r.cycles)
      for (auto& e : cyc)
        if (mine.count(e.arc)) e.side = opposite(e.side);
    for (auto& f : r.free_sides)
      if (f.circle == c) f.side = opposite(f.side);
  }
  return out;
}

} // namespace sd
