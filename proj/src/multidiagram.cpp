#include "multidiagram.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace sd {

namespace {

struct SideLabel {
  bool is_base = false;
  RegionId base_region = -1;
  CircleId thin_circle = -1;
};

struct Event {
  VertexId mv = -1;
  int in_slot = -1, out_slot = -1;
  // context for gap labeling
  enum class Ctx { GridOut, GridIn, Zone } ctx = Ctx::Zone;
  VertexId base_vertex = -1; // grid events
  CircleId other = -1;       // grid events: the crossing base circle
  int arc_pos = -1;          // index of the emitting base arc in circle order
  int pos_after = 0;         // zone events: leftward position held after the crossing
};

} // namespace

bool Generator::operator<(const Generator& o) const {
  if (family_a != o.family_a) return family_a < o.family_a;
  if (family_b != o.family_b) return family_b < o.family_b;
  if (perm != o.perm) return perm < o.perm;
  return entries < o.entries;
}

CircleId MultiDiagram::merged_circle(CircleId base_c, int level) const {
  return (level - 1) * k() + base_c;
}

VertexId MultiDiagram::grid_vertex(VertexId bv, int level_i, int level_j) const {
  auto it = grid_index.find({bv, level_i, level_j});
  if (it == grid_index.end()) throw std::out_of_range("grid vertex not found");
  return it->second;
}

VertexId MultiDiagram::zone_vertex(CircleId c, int zone, int la, int lb) const {
  auto it = zone_pair_index.find({c, zone, std::min(la, lb), std::max(la, lb)});
  if (it == zone_pair_index.end()) throw std::out_of_range("zone vertex not found");
  return it->second;
}

MultiDiagram perturb(const CurveComplex& base, int n) {
  if (n < 1) throw std::invalid_argument("perturb: n must be positive");
  {
    ValidationReport rep = validate(base);
    if (!rep.ok) throw std::invalid_argument("perturb: base complex invalid");
  }
  if (base.num_families() > 1)
    throw std::invalid_argument("perturb: base must carry a single family");

  MultiDiagram d;
  d.base = base;
  const int N = n + 1;
  d.copies = N;
  const int k = base.num_circles();
  ComplexGeometry geo = geometry(base);

  // base-vertex facts
  const int BV = base.num_vertices();
  std::vector<CircleId> bcirc_i(BV), bcirc_j(BV);
  // per (vertex, circle-role 0/1): rotation slots of the circle's head/tail ends
  std::vector<std::array<int, 2>> in_slot(BV), out_slot(BV);
  // band side: which arc of the circle carries the crossings with the other
  // circle's copies, and whether it is the outgoing arc
  std::vector<std::array<ArcId, 2>> band_arc(BV);
  std::vector<std::array<bool, 2>> band_outgoing(BV);
  for (VertexId v = 0; v < BV; ++v) {
    const auto& ends = base.vertices[v].ends;
    bcirc_i[v] = base.arcs[ends[0].arc].circle;
    bcirc_j[v] = base.arcs[ends[1].arc].circle;
    for (int role = 0; role < 2; ++role)
      for (int q = role; q < 4; q += 2) {
        if (ends[q].kind == EndKind::Tail) out_slot[v][role] = q;
        else in_slot[v][role] = q;
      }
    for (int role = 0; role < 2; ++role) {
      // copies of the *other* circle sit to its left; the left-of-travel end
      // of this circle is the one crossed by them
      int band_slot = (out_slot[v][1 - role] + 1) % 4;
      band_arc[v][role] = ends[band_slot].arc;
      band_outgoing[v][role] = ends[band_slot].kind == EndKind::Tail;
    }
  }
  auto role_of = [&](VertexId v, CircleId c) { return bcirc_i[v] == c ? 0 : 1; };

  // ---- merged vertices -------------------------------------------------
  CurveComplex& m = d.merged;
  m.genus = base.genus;

  for (VertexId bv = 0; bv < BV; ++bv)
    for (int li = 1; li <= N; ++li)
      for (int lj = 1; lj <= N; ++lj) {
        VertexId mv = static_cast<VertexId>(d.vertex_info.size());
        MdVertexInfo info;
        info.kind = MdVertexInfo::Kind::Grid;
        info.base_vertex = bv;
        info.base_i = bcirc_i[bv];
        info.base_j = bcirc_j[bv];
        info.level_i = li;
        info.level_j = lj;
        d.vertex_info.push_back(info);
        d.grid_index[{bv, li, lj}] = mv;
      }

  // reversal network: [s_1][s_2 s_1]...[s_{N-1} ... s_1], each adjacent pair
  // crosses exactly once; applying it twice is the identity
  std::vector<int> word;
  for (int blk = 1; blk < N; ++blk)
    for (int p = blk; p >= 1; --p) word.push_back(p);

  // zone events per (circle, level): filled during simulation
  std::vector<std::vector<std::vector<Event>>> zone_events(
      k, std::vector<std::vector<Event>>(N + 1));
  for (CircleId c = 0; c < k; ++c) {
    std::vector<int> arr(N + 1);
    for (int p = 1; p <= N; ++p) arr[p] = p; // zone 0 entered in home order
    for (int zone = 0; zone < 2; ++zone) {
      for (int q = 0; q < static_cast<int>(word.size()); ++q) {
        int p = word[q];
        int lu = arr[p], lw = arr[p + 1];
        VertexId mv = static_cast<VertexId>(d.vertex_info.size());
        MdVertexInfo info;
        info.kind = MdVertexInfo::Kind::Zone;
        info.base_circle = c;
        info.zone = zone;
        info.step = q;
        info.level_u = lu;
        info.level_w = lw;
        d.vertex_info.push_back(info);
        d.zone_pair_index[{c, zone, std::min(lu, lw), std::max(lu, lw)}] = mv;
        Event eu, ew;
        eu.mv = ew.mv = mv;
        eu.ctx = ew.ctx = Event::Ctx::Zone;
        eu.out_slot = 0; eu.in_slot = 2;   // rising strand
        ew.out_slot = 3; ew.in_slot = 1;   // falling strand
        eu.pos_after = p + 1;
        ew.pos_after = p;
        eu.arc_pos = ew.arc_pos = 0;
        zone_events[c][lu].push_back(eu);
        zone_events[c][lw].push_back(ew);
        std::swap(arr[p], arr[p + 1]);
      }
    }
  }
  m.vertices.resize(d.vertex_info.size());

  // ---- strands ----------------------------------------------------------
  m.circles.resize(static_cast<size_t>(N) * k);
  for (int level = 1; level <= N; ++level)
    for (CircleId c = 0; c < k; ++c)
      m.circles[d.merged_circle(c, level)] = Circle{c, level, {}};

  // side labels per merged arc
  std::vector<std::array<SideLabel, 2>> arc_labels;

  auto base_left = [&](CircleId c, ArcId a) -> RegionId {
    return a >= 0 ? geo.side_region(a, Side::Left) : geo.free_side[c][0];
  };
  auto base_right = [&](CircleId c, ArcId a) -> RegionId {
    return a >= 0 ? geo.side_region(a, Side::Right) : geo.free_side[c][1];
  };

  for (CircleId c = 0; c < k; ++c) {
    const Circle& bc = base.circles[c];
    const int nba = static_cast<int>(bc.arcs.size());
    for (int level = 1; level <= N; ++level) {
      std::vector<Event> ev;
      if (bc.is_free()) {
        ev = zone_events[c][level];
      } else {
        for (int t = 0; t < nba; ++t) {
          ArcId a = bc.arcs[t];
          VertexId v0 = base.arcs[a].from, v1 = base.arcs[a].to;
          int r0 = role_of(v0, c), r1 = role_of(v1, c);
          if (band_arc[v0][r0] == a && band_outgoing[v0][r0]) {
            for (int ld = 1; ld <= N; ++ld) {
              Event e;
              e.ctx = Event::Ctx::GridOut;
              e.base_vertex = v0;
              e.other = r0 == 0 ? bcirc_j[v0] : bcirc_i[v0];
              e.arc_pos = t;
              e.mv = r0 == 0 ? d.grid_index[{v0, level, ld}] : d.grid_index[{v0, ld, level}];
              e.in_slot = in_slot[v0][r0];
              e.out_slot = out_slot[v0][r0];
              ev.push_back(e);
            }
          }
          if (t == 0)
            for (Event e : zone_events[c][level]) { e.arc_pos = 0; ev.push_back(e); }
          if (band_arc[v1][r1] == a && !band_outgoing[v1][r1]) {
            for (int ld = N; ld >= 1; --ld) {
              Event e;
              e.ctx = Event::Ctx::GridIn;
              e.base_vertex = v1;
              e.other = r1 == 0 ? bcirc_j[v1] : bcirc_i[v1];
              e.arc_pos = t;
              e.mv = r1 == 0 ? d.grid_index[{v1, level, ld}] : d.grid_index[{v1, ld, level}];
              e.in_slot = in_slot[v1][r1];
              e.out_slot = out_slot[v1][r1];
              ev.push_back(e);
            }
          }
        }
      }
      if (ev.size() < 2) throw std::logic_error("perturb: strand with fewer than two crossings");

      CircleId mc = d.merged_circle(c, level);
      const int r = static_cast<int>(ev.size());
      for (int t = 0; t < r; ++t) {
        const Event& cur = ev[t];
        const Event& nxt = ev[(t + 1) % r];
        ArcId aid = static_cast<ArcId>(m.arcs.size());
        m.arcs.push_back(Arc{mc, cur.mv, nxt.mv});
        m.circles[mc].arcs.push_back(aid);
        m.vertices[cur.mv].ends[cur.out_slot] = ArcEnd{aid, EndKind::Tail};
        m.vertices[nxt.mv].ends[nxt.in_slot] = ArcEnd{aid, EndKind::Head};

        // gap provenance
        SideLabel left, right;
        auto thin = [&](CircleId tc) { SideLabel s; s.thin_circle = tc; return s; };
        auto breg = [&](RegionId rr) { SideLabel s; s.is_base = true; s.base_region = rr; return s; };
        bool same_chart = (cur.ctx != Event::Ctx::Zone && nxt.ctx != Event::Ctx::Zone &&
                           cur.base_vertex == nxt.base_vertex);
        bool both_zone = (cur.ctx == Event::Ctx::Zone && nxt.ctx == Event::Ctx::Zone);
        if (same_chart) {
          left = level == N ? thin(cur.other) : thin(c);
          right = level == 1 ? thin(cur.other) : thin(c);
        } else if (both_zone) {
          int pos = cur.pos_after;
          ArcId a0 = bc.is_free() ? -1 : bc.arcs[0];
          left = pos == N ? breg(base_left(c, a0)) : thin(c);
          right = pos == 1 ? breg(base_right(c, a0)) : thin(c);
        } else {
          // free gap along a base arc
          int g_pos;
          if (nxt.ctx == Event::Ctx::GridOut)
            g_pos = (nxt.arc_pos + nba - 1) % nba;
          else
            g_pos = nxt.arc_pos;
          ArcId g = bc.arcs[g_pos];
          left = level == N ? breg(base_left(c, g)) : thin(c);
          right = level == 1 ? breg(base_right(c, g)) : thin(c);
        }
        arc_labels.push_back({left, right});
      }
    }
  }

  // every vertex end must have been claimed by a strand
  for (size_t v = 0; v < m.vertices.size(); ++v)
    for (int q = 0; q < 4; ++q)
      if (m.vertices[v].ends[q].arc < 0) {
        std::ostringstream os;
        os << "perturb: unset end " << q << " at merged vertex " << v << " (";
        const MdVertexInfo& in = d.vertex_info[v];
        if (in.kind == MdVertexInfo::Kind::Grid)
          os << "grid bv=" << in.base_vertex << " li=" << in.level_i << " lj=" << in.level_j;
        else
          os << "zone c=" << in.base_circle << " z=" << in.zone << " step=" << in.step
             << " lu=" << in.level_u << " lw=" << in.level_w;
        os << ")";
        throw std::logic_error(os.str());
      }

  // ---- regions from traced faces ----------------------------------------
  auto faces = trace_faces(m);
  struct FaceClass {
    bool is_base = false;
    RegionId base_region = -1;
    std::set<CircleId> circles;
  };
  std::vector<FaceClass> fc(faces.size());
  for (size_t f = 0; f < faces.size(); ++f) {
    for (const HalfEdge& h : faces[f].cycle) {
      const SideLabel& lab = arc_labels[h.arc][h.forward ? 0 : 1];
      if (lab.is_base) {
        if (fc[f].is_base && fc[f].base_region != lab.base_region)
          throw std::logic_error("perturb: face with conflicting base regions");
        fc[f].is_base = true;
        fc[f].base_region = lab.base_region;
      } else {
        fc[f].circles.insert(lab.thin_circle);
      }
    }
    if (fc[f].is_base && !fc[f].circles.empty())
      throw std::logic_error("perturb: face with mixed base/thin labels");
  }

  auto to_entries = [](const std::vector<HalfEdge>& cyc) {
    std::vector<BoundaryEntry> out;
    for (const HalfEdge& h : cyc)
      out.push_back(BoundaryEntry{h.arc, h.forward ? Side::Left : Side::Right});
    return out;
  };

  for (RegionId br = 0; br < base.num_regions(); ++br) {
    Region reg;
    reg.genus = base.regions[br].genus;
    for (size_t f = 0; f < faces.size(); ++f)
      if (fc[f].is_base && fc[f].base_region == br)
        reg.cycles.push_back(to_entries(faces[f].cycle));
    if (static_cast<int>(reg.cycles.size()) != base.regions[br].boundary_count())
      throw std::logic_error("perturb: base region boundary count changed");
    RegionProvenance prov;
    prov.kind = RegionProvenance::Kind::Base;
    prov.base_region = br;
    d.region_prov.push_back(prov);
    m.regions.push_back(std::move(reg));
  }
  for (size_t f = 0; f < faces.size(); ++f) {
    if (fc[f].is_base) continue;
    Region reg;
    reg.genus = 0;
    reg.cycles.push_back(to_entries(faces[f].cycle));
    RegionProvenance prov;
    prov.kind = RegionProvenance::Kind::Thin;
    prov.circles = fc[f].circles;
    d.region_prov.push_back(prov);
    m.regions.push_back(std::move(reg));
  }

  ValidationReport rep = validate(m);
  if (!rep.ok) {
    std::ostringstream os;
    os << "perturb: merged complex invalid:";
    for (const auto& v : rep.violations) os << " [" << v << "]";
    throw std::logic_error(os.str());
  }
  return d;
}

std::vector<VertexId> intersection_points(const MultiDiagram& d, CircleId base_a, int fa,
                                          CircleId base_b, int fb) {
  std::vector<VertexId> out;
  if (base_a == base_b) {
    for (int z = 0; z < 2; ++z) {
      auto it = d.zone_pair_index.find({base_a, z, std::min(fa, fb), std::max(fa, fb)});
      if (it != d.zone_pair_index.end()) out.push_back(it->second);
    }
  } else {
    for (VertexId v = 0; v < static_cast<VertexId>(d.vertex_info.size()); ++v) {
      const MdVertexInfo& in = d.vertex_info[v];
      if (in.kind != MdVertexInfo::Kind::Grid) continue;
      if ((in.base_i == base_a && in.level_i == fa && in.base_j == base_b && in.level_j == fb) ||
          (in.base_i == base_b && in.level_i == fb && in.base_j == base_a && in.level_j == fa))
        out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Generator> enumerate_generators(const MultiDiagram& d, int family_a, int family_b) {
  if (family_a == family_b) throw std::invalid_argument("generator families must differ");
  const int k = d.k();
  std::vector<std::vector<std::vector<VertexId>>> pts(k, std::vector<std::vector<VertexId>>(k));
  for (CircleId a = 0; a < k; ++a)
    for (CircleId b = 0; b < k; ++b)
      pts[a][b] = intersection_points(d, a, family_a, b, family_b);

  std::vector<Generator> out;
  std::vector<int> perm(k, -1);
  std::vector<VertexId> entries(k, -1);
  std::vector<bool> used(k, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      Generator g;
      g.family_a = family_a;
      g.family_b = family_b;
      g.entries = entries;
      g.perm = perm;
      out.push_back(std::move(g));
      return;
    }
    for (int b = 0; b < k; ++b) {
      if (used[b] || pts[i][b].empty()) continue;
      used[b] = true;
      perm[i] = b;
      for (VertexId p : pts[i][b]) {
        entries[i] = p;
        self(self, i + 1);
      }
      used[b] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Generator> reference_generators(const MultiDiagram& d, int family_a, int family_b) {
  const int k = d.k();
  if (k < 2)
    throw std::invalid_argument("reference generators need k >= 2 consecutive circles");
  // candidate base crossings per consecutive pair
  std::vector<std::vector<VertexId>> S(k);
  for (VertexId bv = 0; bv < d.base.num_vertices(); ++bv) {
    const auto& ends = d.base.vertices[bv].ends;
    CircleId ci = d.base.arcs[ends[0].arc].circle;
    CircleId cj = d.base.arcs[ends[1].arc].circle;
    for (int i = 0; i < k; ++i) {
      int j = (i + 1) % k;
      if ((ci == i && cj == j) || (ci == j && cj == i)) S[i].push_back(bv);
    }
  }
  for (int i = 0; i < k; ++i)
    if (S[i].empty()) {
      std::ostringstream os;
      os << "consecutive pair (" << i << "," << (i + 1) % k << ") has no intersection";
      throw std::invalid_argument(os.str());
    }

  auto grid_for = [&](VertexId bv, CircleId c_first, int lf, CircleId c_second, int ls) {
    const auto& ends = d.base.vertices[bv].ends;
    CircleId ci = d.base.arcs[ends[0].arc].circle;
    return ci == c_first ? d.grid_index.at({bv, lf, ls}) : d.grid_index.at({bv, ls, lf});
  };

  std::vector<Generator> out;
  // type: 0 -> every entry of the shape gamma_i^{fa} . gamma_{i+1}^{fb},
  // type: 1 -> every entry of the shape gamma_{i+1}^{fa} . gamma_i^{fb}
  for (int type = 0; type < 2; ++type) {
    std::vector<int> pick(k, 0);
    while (true) {
      Generator g;
      g.family_a = family_a;
      g.family_b = family_b;
      g.entries.assign(k, -1);
      g.perm.assign(k, -1);
      for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        VertexId bv = S[i][pick[i]];
        if (type == 0) {
          g.entries[i] = grid_for(bv, i, family_a, j, family_b);
          g.perm[i] = j;
        } else {
          g.entries[j] = grid_for(bv, j, family_a, i, family_b);
          g.perm[j] = i;
        }
      }
      out.push_back(std::move(g));
      int i = 0;
      while (i < k && pick[i] + 1 == static_cast<int>(S[i].size())) pick[i++] = 0;
      if (i == k) break;
      ++pick[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Generator transport_generator(const MultiDiagram& d, const Generator& x, int to_family_a,
                              int to_family_b) {
  if (!(to_family_a < to_family_b))
    throw std::invalid_argument("transport: target families must be ordered");
  int shared, old_other, new_other;
  if (to_family_a == x.family_b) { // (t1,t2) -> (t2,t3)
    shared = x.family_b;
    old_other = x.family_a;
    new_other = to_family_b;
  } else if (to_family_b == x.family_a) { // (t2,t3) -> (t1,t2)
    shared = x.family_a;
    old_other = x.family_b;
    new_other = to_family_a;
  } else {
    throw std::invalid_argument("transport: family pairs do not overlap");
  }

  const int k = d.k();
  Generator g;
  g.family_a = to_family_a;
  g.family_b = to_family_b;
  g.entries.assign(k, -1);
  g.perm.assign(k, -1);

  for (int i = 0; i < k; ++i) {
    VertexId v = x.entries[i];
    // the two base circles carried by this entry
    CircleId c_first = i;            // at level x.family_a
    CircleId c_second = x.perm[i];   // at level x.family_b
    CircleId c_shared = (shared == x.family_a) ? c_first : c_second;
    CircleId c_moved = (shared == x.family_a) ? c_second : c_first;
    const MdVertexInfo& info = d.vertex_info[v];
    VertexId nv;
    if (info.kind == MdVertexInfo::Kind::Zone) {
      nv = d.zone_vertex(info.base_circle, info.zone, shared, new_other);
    } else {
      int li = info.level_i, lj = info.level_j;
      if (info.base_i == c_moved) li = new_other; else lj = new_other;
      nv = d.grid_vertex(info.base_vertex, li, lj);
    }
    int first_circle = (shared == to_family_a) ? c_shared : c_moved;
    int second_circle = (shared == to_family_a) ? c_moved : c_shared;
    if (g.entries[first_circle] != -1)
      throw std::logic_error("transport: entry slot collision");
    g.entries[first_circle] = nv;
    g.perm[first_circle] = second_circle;
  }
  for (int i = 0; i < k; ++i)
    if (g.entries[i] < 0) throw std::logic_error("transport: missing entry");
  return g;
}

} // namespace sd
