#include "moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "homology.hpp"

namespace sd {

namespace {

struct SideTag {
  enum class Kind { Old, Channel, Sliver } kind = Kind::Channel;
  RegionId region = -1; // Old
};

struct WalkNode {
  VertexId v = -1;
  int in_slot = -1, out_slot = -1;
  SideTag left, right; // labels of the arc LEAVING this node
};

SideTag old_tag(RegionId r) { return SideTag{SideTag::Kind::Old, r}; }
SideTag channel_tag() { return SideTag{SideTag::Kind::Channel, -1}; }
SideTag sliver_tag() { return SideTag{SideTag::Kind::Sliver, -1}; }

// angle-sorted rotation builder for freshly created vertices
struct PendingVertex {
  // (angle, placeholder id): resolved to arcs later
  std::array<int, 4> angle{};
  // role of each slot: filled by the walk assembly
};

int slot_of_angle(const std::array<int, 4>& sorted, int angle) {
  for (int q = 0; q < 4; ++q)
    if (sorted[q] == angle) return q;
  throw std::logic_error("slide: angle not found");
}

// where does a stored boundary cycle of the region contain the given side?
int cycle_containing(const Region& reg, ArcId a, Side s) {
  for (size_t t = 0; t < reg.cycles.size(); ++t)
    for (const auto& e : reg.cycles[t])
      if (e.arc == a && e.side == s) return static_cast<int>(t);
  return -1;
}

} // namespace

MoveRecord slide(const CurveComplex& base, CircleId ci, CircleId cj, const SlidePath& path) {
  {
    ValidationReport rep = validate(base);
    if (!rep.ok) throw std::invalid_argument("slide: base complex invalid");
  }
  if (ci == cj) throw std::invalid_argument("slide: endpoint circles equal");
  if (base.circles[ci].is_free() || base.circles[cj].is_free())
    throw std::invalid_argument("slide: crossing-free circles unsupported");
  ComplexGeometry geo = geometry(base);

  // the circles must be disjoint, otherwise the band sum self-intersects
  for (const Vertex& v : base.vertices) {
    std::set<CircleId> cs;
    for (const auto& e : v.ends) cs.insert(base.arcs[e.arc].circle);
    if (cs.count(ci) && cs.count(cj))
      throw std::invalid_argument("slide: circles intersect; a single slide would self-cross");
  }
  // homologically distinct
  {
    H1Presentation h1 = h1_basis(base);
    if (circle_class(base, h1, ci) == circle_class(base, h1, cj))
      throw std::invalid_argument("slide: circles are homologous");
  }

  const auto& steps = path.steps;
  const int m = static_cast<int>(steps.size()) - 1; // number of crossed arcs
  if (m < 0) throw std::invalid_argument("slide: empty path");
  ArcId a0 = steps.front().entry;
  ArcId aend = steps.back().exit;
  if (base.arcs[a0].circle != ci) throw std::invalid_argument("slide: path must start on circle i");
  if (base.arcs[aend].circle != cj) throw std::invalid_argument("slide: path must end on circle j");

  std::set<RegionId> traversed;
  std::set<ArcId> crossed;
  for (int t = 0; t <= m; ++t) {
    if (!traversed.insert(steps[t].region).second)
      throw std::invalid_argument("slide: path revisits a region");
    if (t < m) {
      ArcId x = steps[t].exit;
      if (x != steps[t + 1].entry)
        throw std::invalid_argument("slide: consecutive steps do not share the crossed arc");
      CircleId cx = base.arcs[x].circle;
      if (cx == ci || cx == cj)
        throw std::invalid_argument("slide: path crosses an endpoint circle");
      if (!crossed.insert(x).second) throw std::invalid_argument("slide: arc crossed twice");
    }
    if (steps[t].entry == steps[t].exit)
      throw std::invalid_argument("slide: step enters and leaves through the same arc");
  }

  auto unique_side = [&](ArcId a, RegionId r) -> Side {
    bool L = geo.side_region(a, Side::Left) == r;
    bool R = geo.side_region(a, Side::Right) == r;
    if (L == R) throw std::invalid_argument("slide: ambiguous crossing side");
    return L ? Side::Left : Side::Right;
  };

  const Side s0 = unique_side(a0, steps.front().region);
  const Side send = unique_side(aend, steps.back().region);
  const bool band_left_e1 = (s0 == Side::Left);
  const int sign = (s0 == send) ? 1 : -1;
  // note: the region on the other side of the start arc may itself be
  // traversed; the face tracer resolves the slit attachment either way

  // sides of the crossed arcs facing the region before the crossing
  std::vector<Side> s_t(m);
  for (int t = 0; t < m; ++t) s_t[t] = unique_side(steps[t].exit, steps[t].region);

  // which old vertices lie on circle j, in traversal order of the parallel copy
  const Circle& gj = base.circles[cj];
  int epos = -1;
  for (size_t t = 0; t < gj.arcs.size(); ++t)
    if (gj.arcs[t] == aend) epos = static_cast<int>(t);
  if (epos < 0) throw std::logic_error("slide: end arc not on circle j");
  const int nj = static_cast<int>(gj.arcs.size());
  // sigma = +1: traverse circle j forward starting at head(aend)
  std::vector<VertexId> jverts;
  std::vector<ArcId> jarc_after; // the circle-j arc between jverts[t] and jverts[t+1]
  if (sign > 0) {
    for (int t = 0; t < nj; ++t) {
      ArcId b = gj.arcs[(epos + t) % nj];
      jverts.push_back(base.arcs[b].to);
      jarc_after.push_back(gj.arcs[(epos + t + 1) % nj]);
    }
  } else {
    for (int t = 0; t < nj; ++t) {
      ArcId b = gj.arcs[(epos - t % nj + nj) % nj];
      jverts.push_back(base.arcs[b].from);
      jarc_after.push_back(gj.arcs[(epos - t - 1 % nj + 2 * nj) % nj]);
    }
  }

  // out-slot of circle j at each of its vertices, and the strand end on the
  // send side (the arc the parallel copy will puncture)
  auto slots_at = [&](VertexId v, CircleId c) {
    std::array<int, 2> io{-1, -1}; // in, out
    for (int q = 0; q < 4; ++q) {
      const ArcEnd& e = base.vertices[v].ends[q];
      if (base.arcs[e.arc].circle != c) continue;
      if (e.kind == EndKind::Head) io[0] = q;
      else io[1] = q;
    }
    return io;
  };

  MoveRecord rec;
  rec.kind = MoveRecord::Kind::Slide;
  rec.before = base;
  rec.slid = ci;
  rec.over = cj;
  rec.path = path;
  rec.sign = sign;
  rec.circle_perm.resize(base.num_circles());
  for (int c = 0; c < base.num_circles(); ++c) rec.circle_perm[c] = c;

  CurveComplex out;
  out.genus = base.genus;
  out.section_class = base.section_class;
  out.circles.resize(base.num_circles());
  for (CircleId c = 0; c < base.num_circles(); ++c)
    out.circles[c] = Circle{base.circles[c].index, base.circles[c].family, {}};
  out.vertices.resize(base.num_vertices()); // old rotations filled by walks

  struct NewVert {
    std::array<int, 4> angles_sorted{};
    // per-end data assigned by walks
  };
  // create band vertices u_t, w_t with slot conventions
  // slots: x-out = 0, x-in = 2; band strand at 1/3 by side
  std::vector<VertexId> u_ids(m), w_ids(m);
  for (int t = 0; t < m; ++t) {
    u_ids[t] = static_cast<VertexId>(out.vertices.size());
    out.vertices.emplace_back();
    w_ids[t] = static_cast<VertexId>(out.vertices.size());
    out.vertices.emplace_back();
    rec.band_vertices.push_back(u_ids[t]);
    rec.band_vertices.push_back(w_ids[t]);
  }
  // band strand slots at u_t / w_t:
  //   s_t == Left : E1 in 1 out 3; E2 in 3 out 1
  //   s_t == Right: E1 in 3 out 1; E2 in 1 out 3
  auto e1_slots = [&](int t) {
    return s_t[t] == Side::Left ? std::array<int, 2>{1, 3} : std::array<int, 2>{3, 1};
  };
  auto e2_slots = [&](int t) {
    return s_t[t] == Side::Left ? std::array<int, 2>{3, 1} : std::array<int, 2>{1, 3};
  };

  // parallel-copy vertices, one per circle-j vertex, with computed rotations
  struct PvInfo {
    VertexId id;
    VertexId base_v;
    ArcId host;        // the arc of the crossing circle that gets punctured
    bool at_tail;      // puncture near the host's tail (else near its head)
    int p_in, p_out;   // slots of the parallel strand
    int c_in, c_out;   // slots of the host strand
  };
  std::vector<PvInfo> pvs;
  for (VertexId v : jverts) {
    auto io_j = slots_at(v, cj);
    int slot_s = (io_j[1] + (send == Side::Left ? 1 : 3)) % 4;
    const ArcEnd& host_end = base.vertices[v].ends[slot_s];
    PvInfo info;
    info.id = static_cast<VertexId>(out.vertices.size());
    out.vertices.emplace_back();
    info.base_v = v;
    info.host = host_end.arc;
    info.at_tail = host_end.kind == EndKind::Tail;
    // angles: gamma_j direction = 0; host end direction theta_c
    int theta_c = send == Side::Left ? 90 : 270;
    int p_out_angle = sign > 0 ? 0 : 180;
    int c_out_angle = info.at_tail ? theta_c : (theta_c + 180) % 360;
    std::array<std::pair<int, int>, 4> ends = {
        std::make_pair(p_out_angle, 0),            // P out
        std::make_pair((p_out_angle + 180) % 360, 1), // P in
        std::make_pair(c_out_angle, 2),            // host out
        std::make_pair((c_out_angle + 180) % 360, 3)}; // host in
    std::sort(ends.begin(), ends.end());
    for (int q = 0; q < 4; ++q) {
      switch (ends[q].second) {
        case 0: info.p_out = q; break;
        case 1: info.p_in = q; break;
        case 2: info.c_out = q; break;
        case 3: info.c_in = q; break;
      }
    }
    pvs.push_back(info);
    rec.parallel_vertices.push_back(info.id);
  }

  // ---- insertion tables for old arcs --------------------------------------
  struct Insertion {
    VertexId v;
    int in_slot, out_slot; // slots used by the host strand at this vertex
    int order;             // 0 front pv, 1 band first, 2 band second, 3 back pv
    SideTag left_after, right_after; // labels of the piece AFTER this insertion
  };
  std::map<ArcId, std::vector<Insertion>> ins;

  for (int t = 0; t < m; ++t) {
    ArcId x = steps[t].exit;
    bool e1_first = (s_t[t] == Side::Right) == band_left_e1;
    // piece labels: before band = old; between = channel; after = old
    SideTag L = old_tag(geo.side_region(x, Side::Left));
    SideTag R = old_tag(geo.side_region(x, Side::Right));
    Insertion first, second;
    first.v = e1_first ? u_ids[t] : w_ids[t];
    second.v = e1_first ? w_ids[t] : u_ids[t];
    first.in_slot = 2; // host: x-in = 2? no: host uses x slots 0 (out) / 2 (in)
    first.in_slot = 2;
    first.out_slot = 0;
    second.in_slot = 2;
    second.out_slot = 0;
    first.order = 1;
    second.order = 2;
    first.left_after = channel_tag();
    first.right_after = channel_tag();
    second.left_after = L;
    second.right_after = R;
    ins[x].push_back(first);
    ins[x].push_back(second);
  }
  for (const PvInfo& p : pvs) {
    Insertion e;
    e.v = p.id;
    e.in_slot = p.c_in;
    e.out_slot = p.c_out;
    SideTag L = old_tag(geo.side_region(p.host, Side::Left));
    SideTag R = old_tag(geo.side_region(p.host, Side::Right));
    if (p.at_tail) {
      e.order = 0;
      e.left_after = L; // piece after the stub is ordinary material
      e.right_after = R;
    } else {
      e.order = 3;
      e.left_after = sliver_tag(); // the closing stub
      e.right_after = sliver_tag();
    }
    ins[p.host].push_back(e);
  }
  for (auto& [a, list] : ins)
    std::sort(list.begin(), list.end(),
              [](const Insertion& x, const Insertion& y) { return x.order < y.order; });

  // ---- build walks ---------------------------------------------------------
  // labels of the piece leaving an old vertex node: the old sides of the arc,
  // except circle-j arcs whose send side becomes sliver material
  auto arc_tags = [&](ArcId a) -> std::array<SideTag, 2> {
    SideTag L = old_tag(geo.side_region(a, Side::Left));
    SideTag R = old_tag(geo.side_region(a, Side::Right));
    if (base.arcs[a].circle == cj) {
      if (send == Side::Left) L = sliver_tag();
      else R = sliver_tag();
    }
    return {L, R};
  };

  std::vector<std::vector<WalkNode>> walks(base.num_circles());
  for (CircleId c = 0; c < base.num_circles(); ++c) {
    if (c == ci) continue;
    std::vector<WalkNode>& w = walks[c];
    for (ArcId a : base.circles[c].arcs) {
      // insertions along a, then the head vertex
      auto tags = arc_tags(a);
      auto it = ins.find(a);
      if (it != ins.end())
        for (const Insertion& e : it->second) {
          WalkNode n;
          n.v = e.v;
          n.in_slot = e.in_slot;
          n.out_slot = e.out_slot;
          // piece after a front stub or interior insertion
          if (e.order == 0 || e.order == 1 || e.order == 2) {
            n.left = e.order == 1 ? channel_tag() : (e.order == 0 ? tags[0] : tags[0]);
            n.right = e.order == 1 ? channel_tag() : (e.order == 0 ? tags[1] : tags[1]);
            if (e.order == 1) { n.left = channel_tag(); n.right = channel_tag(); }
          } else {
            n.left = sliver_tag();
            n.right = sliver_tag();
          }
          w.push_back(n);
        }
      WalkNode head;
      head.v = base.arcs[a].to;
      auto io = slots_at(base.arcs[a].to, c);
      head.in_slot = io[0];
      // out slot belongs to the NEXT arc; recompute from rotation
      head.out_slot = io[1];
      // labels of the piece leaving the head = start of the next arc
      w.push_back(head);
    }
    // fix the "leaving" labels: the piece after node q runs along the arc that
    // starts at that node; recompute per node
    // nodes were pushed arc by arc: walk again
    size_t idx = 0;
    for (size_t ai = 0; ai < base.circles[c].arcs.size(); ++ai) {
      ArcId a = base.circles[c].arcs[ai];
      ArcId next_a = base.circles[c].arcs[(ai + 1) % base.circles[c].arcs.size()];
      auto tags_a = arc_tags(a);
      auto tags_next = arc_tags(next_a);
      size_t count = 1 + (ins.count(a) ? ins[a].size() : 0);
      // entering pieces of arc a: the first piece leaves the PREVIOUS node
      // (handled there); each insertion node's leaving labels were set above
      // except stubs near the tail: piece after a front stub is ordinary a
      // material -- already set. The head node's leaving labels are the first
      // piece of next_a, which is a stub if next_a has a front pv.
      size_t head_idx = idx + count - 1;
      WalkNode& head = walks[c][head_idx];
      bool next_front_stub = false;
      if (ins.count(next_a))
        for (const Insertion& e : ins[next_a])
          if (e.order == 0) next_front_stub = true;
      if (next_front_stub) {
        head.left = sliver_tag();
        head.right = sliver_tag();
      } else {
        head.left = tags_next[0];
        head.right = tags_next[1];
      }
      (void)tags_a;
      idx += count;
    }
  }

  // circle i walk: u_0..u_{m-1}, parallel vertices, w_{m-1}..w_0, old vertices
  {
    std::vector<WalkNode>& w = walks[ci];
    const Circle& gi = base.circles[ci];
    int p0 = -1;
    for (size_t t = 0; t < gi.arcs.size(); ++t)
      if (gi.arcs[t] == a0) p0 = static_cast<int>(t);
    if (p0 < 0) throw std::logic_error("slide: start arc not on circle i");

    for (int t = 0; t < m; ++t) {
      WalkNode n;
      n.v = u_ids[t];
      auto sl = e1_slots(t);
      n.in_slot = sl[0];
      n.out_slot = sl[1];
      RegionId rnext = steps[t + 1].region;
      n.left = band_left_e1 ? old_tag(rnext) : channel_tag();
      n.right = band_left_e1 ? channel_tag() : old_tag(rnext);
      w.push_back(n);
    }
    // parallel copy nodes
    for (size_t t = 0; t < pvs.size(); ++t) {
      WalkNode n;
      n.v = pvs[t].id;
      n.in_slot = pvs[t].p_in;
      n.out_slot = pvs[t].p_out;
      SideTag outer;
      if (t + 1 < pvs.size()) {
        ArcId b = jarc_after[t];
        outer = old_tag(geo.side_region(b, send));
      } else {
        outer = old_tag(steps.back().region); // back toward the gap
      }
      n.left = band_left_e1 ? outer : sliver_tag();
      n.right = band_left_e1 ? sliver_tag() : outer;
      if (t + 1 == pvs.size()) {
        // the piece returning to the band: inner side is channel material
        n.left = band_left_e1 ? outer : channel_tag();
        n.right = band_left_e1 ? channel_tag() : outer;
      }
      w.push_back(n);
    }
    for (int t = m - 1; t >= 0; --t) {
      WalkNode n;
      n.v = w_ids[t];
      auto sl = e2_slots(t);
      n.in_slot = sl[0];
      n.out_slot = sl[1];
      RegionId rt = steps[t].region;
      n.left = band_left_e1 ? old_tag(rt) : channel_tag();
      n.right = band_left_e1 ? channel_tag() : old_tag(rt);
      if (t == 0) { // the piece rejoining the start arc
        n.left = old_tag(geo.side_region(a0, Side::Left));
        n.right = old_tag(geo.side_region(a0, Side::Right));
      }
      w.push_back(n);
    }
    // old vertices from head(a0) around to tail(a0)
    for (size_t t = 0; t < gi.arcs.size(); ++t) {
      ArcId a = gi.arcs[(p0 + t) % gi.arcs.size()];
      ArcId next_a = gi.arcs[(p0 + t + 1) % gi.arcs.size()];
      WalkNode n;
      n.v = base.arcs[a].to;
      auto io = slots_at(n.v, ci);
      n.in_slot = io[0];
      n.out_slot = io[1];
      auto tags = arc_tags(next_a);
      n.left = tags[0];
      n.right = tags[1];
      if (t + 1 == gi.arcs.size()) {
        // leaving the cut node: the piece runs along a0 into the band
        n.left = old_tag(geo.side_region(a0, Side::Left));
        n.right = old_tag(geo.side_region(a0, Side::Right));
      }
      w.push_back(n);
    }
    // fix the node BEFORE the parallel copy when m = 0: it is the last old
    // vertex, whose leaving labels run along a0 into the band -- set above.
    if (m > 0) {
      // the last u node's leaving piece enters the parallel region: its outer
      // label is the last step's region, inner channel -- set in the loop for
      // u_{m-1} via rnext = steps[m].region
    }
  }

  // the piece leaving u_{m-1} (or the cut when m = 0) belongs to R_m; the
  // loop above set u_t's labels from steps[t+1].region which covers it.

  // ---- materialize arcs ----------------------------------------------------
  std::vector<std::array<SideTag, 2>> arc_sides;
  for (CircleId c = 0; c < base.num_circles(); ++c) {
    auto& w = walks[c];
    if (w.empty()) throw std::logic_error("slide: empty walk");
    const int n = static_cast<int>(w.size());
    for (int q = 0; q < n; ++q) {
      const WalkNode& cur = w[q];
      const WalkNode& nxt = w[(q + 1) % n];
      ArcId aid = static_cast<ArcId>(out.arcs.size());
      out.arcs.push_back(Arc{c, cur.v, nxt.v});
      out.circles[c].arcs.push_back(aid);
      out.vertices[cur.v].ends[cur.out_slot] = ArcEnd{aid, EndKind::Tail};
      out.vertices[nxt.v].ends[nxt.in_slot] = ArcEnd{aid, EndKind::Head};
      arc_sides.push_back({cur.left, cur.right});
    }
  }

  // ---- regions -------------------------------------------------------------
  auto faces = trace_faces(out);
  struct FaceInfo {
    std::set<RegionId> old_ids;
    bool channelish = false;
  };
  std::vector<FaceInfo> fi(faces.size());
  for (size_t f = 0; f < faces.size(); ++f)
    for (const HalfEdge& h : faces[f].cycle) {
      const SideTag& tag = arc_sides[h.arc][h.forward ? 0 : 1];
      if (tag.kind == SideTag::Kind::Old) fi[f].old_ids.insert(tag.region);
      else fi[f].channelish = true;
    }

  auto to_entries = [](const std::vector<HalfEdge>& cyc) {
    std::vector<BoundaryEntry> outv;
    for (const HalfEdge& h : cyc)
      outv.push_back(BoundaryEntry{h.arc, h.forward ? Side::Left : Side::Right});
    return outv;
  };

  rec.region_image.assign(base.num_regions(), -1);

  // find the marker half-edge identifying the cut-off disk of a step
  auto marker_for_step = [&](int t) -> HalfEdge {
    Side sE = t == 0 ? s0 : opposite(s_t[t - 1]);
    ArcId entry = steps[t].entry;
    // pieces of the entry arc in the new complex, in old-arc direction
    std::vector<ArcId> pieces;
    CircleId c = base.arcs[entry].circle;
    const auto& arcs_of = out.circles[c].arcs;
    // walk the new circle and match the pieces directed from the old tail
    // to the old head: pieces start at the node corresponding to the old tail
    // of `entry`
    VertexId from = base.arcs[entry].from, to = base.arcs[entry].to;
    const int n = static_cast<int>(arcs_of.size());
    int start = -1;
    for (int q = 0; q < n; ++q)
      if (out.arcs[arcs_of[q]].from == from) {
        // candidate: follow forward until an old vertex; accept if it is `to`
        // and interior vertices are insertions of `entry`
        std::vector<ArcId> cand;
        int qq = q;
        bool good = true;
        while (true) {
          ArcId aa = arcs_of[qq % n];
          cand.push_back(aa);
          VertexId h = out.arcs[aa].to;
          if (h < base.num_vertices()) {
            good = h == to && !cand.empty();
            break;
          }
          bool is_ins = false;
          if (ins.count(entry))
            for (const Insertion& e : ins[entry])
              if (e.v == h) is_ins = true;
          if (!is_ins) { good = false; break; }
          ++qq;
        }
        if (good && static_cast<int>(cand.size()) == 1 + (ins.count(entry) ? (int)ins[entry].size() : 0)) {
          pieces = cand;
          start = q;
          break;
        }
      }
    if (pieces.empty()) throw std::logic_error("slide: entry pieces not found");
    ArcId piece = sE == Side::Left ? pieces.back() : pieces.front();
    return HalfEdge{piece, sE == Side::Left};
  };

  // marker for step 0 when the entry is the start arc a0: its pieces are the
  // two merged arcs; downstream along the cycle = the piece ending at head(a0)
  auto marker_for_start = [&]() -> HalfEdge {
    const auto& arcs_of = out.circles[ci].arcs;
    ArcId to_head = -1, from_tail = -1;
    for (ArcId a : arcs_of) {
      if (out.arcs[a].to == base.arcs[a0].to && out.arcs[a].from >= base.num_vertices())
        to_head = a;
      if (out.arcs[a].from == base.arcs[a0].from && out.arcs[a].to >= base.num_vertices())
        from_tail = a;
      if (out.arcs[a].from == base.arcs[a0].from && out.arcs[a].to == base.arcs[a0].to &&
          m == 0 && pvs.empty())
        throw std::logic_error("slide: degenerate start arc");
    }
    if (to_head < 0 || from_tail < 0) throw std::logic_error("slide: cut arcs not found");
    return s0 == Side::Left ? HalfEdge{to_head, true} : HalfEdge{from_tail, false};
  };

  std::map<std::pair<ArcId, bool>, int> face_of_side;
  for (size_t f = 0; f < faces.size(); ++f)
    for (const HalfEdge& h : faces[f].cycle) face_of_side[{h.arc, h.forward}] = static_cast<int>(f);

  std::vector<int> face_region(faces.size(), -1);
  // traversed regions: split into cut-off disk and principal remainder
  for (int t = 0; t <= m; ++t) {
    RegionId r = steps[t].region;
    const Region& reg = base.regions[r];
    Side sE = t == 0 ? s0 : opposite(s_t[t - 1]);
    Side sX = t == m ? send : s_t[t];
    ArcId entry = steps[t].entry;
    ArcId exit = steps[t].exit;
    int cyc_in = cycle_containing(reg, entry, sE);
    int cyc_out = cycle_containing(reg, exit, sX);
    if (cyc_in < 0 || cyc_out < 0) throw std::invalid_argument("slide: step arcs not on region");
    HalfEdge marker = t == 0 ? marker_for_start() : marker_for_step(t);
    int disk_face = face_of_side.at({marker.arc, marker.forward});
    if (cyc_in == cyc_out) {
      // disk piece + remainder carrying the region's topology
      Region disk;
      disk.genus = 0;
      disk.cycles.push_back(to_entries(faces[disk_face].cycle));
      face_region[disk_face] = out.num_regions();
      out.regions.push_back(std::move(disk));
      Region rem;
      rem.genus = reg.genus;
      RegionId rem_id = out.num_regions();
      for (size_t f = 0; f < faces.size(); ++f)
        if (static_cast<int>(f) != disk_face && fi[f].old_ids.count(r)) {
          if (fi[f].old_ids.size() != 1)
            throw std::logic_error("slide: face with conflicting regions");
          rem.cycles.push_back(to_entries(faces[f].cycle));
          face_region[f] = rem_id;
        }
      if (rem.boundary_count() != reg.boundary_count())
        throw std::logic_error("slide: remainder boundary count changed");
      rec.region_image[r] = rem_id;
      out.regions.push_back(std::move(rem));
    } else {
      // the cut joins two boundary circles: one region, one fewer cycle
      Region merged;
      merged.genus = reg.genus;
      RegionId id = out.num_regions();
      for (size_t f = 0; f < faces.size(); ++f)
        if (fi[f].old_ids.count(r)) {
          merged.cycles.push_back(to_entries(faces[f].cycle));
          face_region[f] = id;
        }
      if (merged.boundary_count() != reg.boundary_count() - 1)
        throw std::logic_error("slide: merged boundary count unexpected");
      rec.region_image[r] = id;
      out.regions.push_back(std::move(merged));
    }
  }
  // untouched, back and flanking regions: one region each
  for (RegionId r = 0; r < base.num_regions(); ++r) {
    if (traversed.count(r)) continue;
    Region reg;
    reg.genus = base.regions[r].genus;
    RegionId id = out.num_regions();
    bool any = false;
    for (size_t f = 0; f < faces.size(); ++f)
      if (fi[f].old_ids.count(r)) {
        if (fi[f].old_ids.size() != 1)
          throw std::logic_error("slide: face with conflicting regions");
        reg.cycles.push_back(to_entries(faces[f].cycle));
        face_region[f] = id;
        any = true;
      }
    if (!any) throw std::logic_error("slide: region lost all faces");
    if (reg.boundary_count() != base.regions[r].boundary_count())
      throw std::logic_error("slide: region boundary count changed");
    rec.region_image[r] = id;
    out.regions.push_back(std::move(reg));
    // free boundaries persist untouched
    out.regions.back().free_sides = base.regions[r].free_sides;
  }
  // remaining faces: channel corridor pieces and sliver cells, all disks
  for (size_t f = 0; f < faces.size(); ++f) {
    if (face_region[f] >= 0) continue;
    if (!fi[f].old_ids.empty()) throw std::logic_error("slide: unassigned face with old label");
    Region reg;
    reg.genus = 0;
    reg.cycles.push_back(to_entries(faces[f].cycle));
    face_region[f] = out.num_regions();
    out.regions.push_back(std::move(reg));
  }

  {
    ValidationReport rep = validate(out);
    if (!rep.ok) {
      std::ostringstream os;
      os << "slide: result invalid:";
      for (const auto& v : rep.violations) os << " [" << v << "]";
      throw std::logic_error(os.str());
    }
  }
  rec.after = std::move(out);
  return rec;
}

CurveComplex unslide(const MoveRecord& rec) {
  if (rec.kind != MoveRecord::Kind::Slide) throw std::invalid_argument("unslide: not a slide");
  const CurveComplex& af = rec.after;
  std::set<VertexId> removed(rec.band_vertices.begin(), rec.band_vertices.end());
  removed.insert(rec.parallel_vertices.begin(), rec.parallel_vertices.end());

  CurveComplex out;
  out.genus = af.genus;
  out.section_class = af.section_class;
  out.circles.resize(af.num_circles());
  for (CircleId c = 0; c < af.num_circles(); ++c)
    out.circles[c] = Circle{af.circles[c].index, af.circles[c].family, {}};
  out.vertices.resize(rec.before.num_vertices());

  // rebuild each circle by dropping the removed vertices from its walk
  for (CircleId c = 0; c < af.num_circles(); ++c) {
    std::vector<WalkNode> nodes;
    for (ArcId a : af.circles[c].arcs) {
      VertexId h = af.arcs[a].to;
      if (removed.count(h)) continue;
      WalkNode n;
      n.v = h;
      // slots from the after-complex rotation
      for (int q = 0; q < 4; ++q) {
        const ArcEnd& e = af.vertices[h].ends[q];
        if (af.arcs[e.arc].circle != c) continue;
        if (e.kind == EndKind::Head) n.in_slot = q;
        else n.out_slot = q;
      }
      nodes.push_back(n);
    }
    if (nodes.empty()) {
      if (!af.circles[c].arcs.empty())
        throw std::logic_error("unslide: circle lost all vertices");
      continue; // crossing-free circle
    }
    const int n = static_cast<int>(nodes.size());
    for (int q = 0; q < n; ++q) {
      const WalkNode& cur = nodes[q];
      const WalkNode& nxt = nodes[(q + 1) % n];
      ArcId aid = static_cast<ArcId>(out.arcs.size());
      out.arcs.push_back(Arc{c, cur.v, nxt.v});
      out.circles[c].arcs.push_back(aid);
      out.vertices[cur.v].ends[cur.out_slot] = ArcEnd{aid, EndKind::Tail};
      out.vertices[nxt.v].ends[nxt.in_slot] = ArcEnd{aid, EndKind::Head};
    }
  }

  // regions: trace and match the corner structure of the before-complex
  auto corner_key = [](const TracedFace& f) {
    std::vector<std::pair<VertexId, int>> k = f.corners;
    std::vector<std::pair<VertexId, int>> best = k;
    for (size_t s = 1; s < k.size(); ++s) {
      std::rotate(k.begin(), k.begin() + 1, k.end());
      if (k < best) best = k;
    }
    return best;
  };
  auto new_faces = trace_faces(out);
  std::map<std::vector<std::pair<VertexId, int>>, const TracedFace*> by_key;
  for (const auto& f : new_faces) by_key[corner_key(f)] = &f;

  auto old_faces = trace_faces(rec.before);
  std::map<std::vector<std::pair<VertexId, int>>, const TracedFace*> old_by_key;
  for (const auto& f : old_faces) old_by_key[corner_key(f)] = &f;
  if (by_key.size() != old_by_key.size()) throw std::logic_error("unslide: face count differs");

  // group new faces by the before-regions via corner keys
  std::map<std::vector<std::pair<VertexId, int>>, RegionId> key_region;
  {
    std::map<std::vector<HalfEdge>, RegionId> cyc_region;
    for (RegionId r = 0; r < rec.before.num_regions(); ++r)
      for (const auto& cyc : rec.before.regions[r].cycles) {
        std::vector<HalfEdge> hc;
        for (const auto& e : cyc) hc.push_back(entry_half_edge(e));
        cyc_region[canonical_cycle(hc)] = r;
      }
    for (const auto& f : old_faces) {
      auto it = cyc_region.find(canonical_cycle(f.cycle));
      if (it == cyc_region.end()) throw std::logic_error("unslide: old face unmatched");
      key_region[corner_key(f)] = it->second;
    }
  }

  out.regions.resize(rec.before.num_regions());
  for (RegionId r = 0; r < rec.before.num_regions(); ++r) {
    out.regions[r].genus = rec.before.regions[r].genus;
    out.regions[r].free_sides = rec.before.regions[r].free_sides;
  }
  for (const auto& [key, face] : by_key) {
    auto it = key_region.find(key);
    if (it == key_region.end()) throw std::logic_error("unslide: new face unmatched");
    std::vector<BoundaryEntry> cyc;
    for (const HalfEdge& h : face->cycle)
      cyc.push_back(BoundaryEntry{h.arc, h.forward ? Side::Left : Side::Right});
    out.regions[it->second].cycles.push_back(std::move(cyc));
  }

  ValidationReport rep = validate(out);
  if (!rep.ok) throw std::logic_error("unslide: result invalid");
  return out;
}

MoveRecord shift_reorder(const CurveComplex& base, int k_idx, int l_idx) {
  const int k = base.num_circles();
  if (k_idx < 0 || k_idx >= k || l_idx < 0 || l_idx >= k)
    throw std::invalid_argument("shift_reorder: bad indices");
  // new order: remove the circle at k_idx, reinsert after position l_idx
  std::vector<int> order;
  for (int c = 0; c < k; ++c)
    if (c != k_idx) order.push_back(c);
  int insert_at = l_idx + (l_idx >= k_idx ? 0 : 1);
  if (insert_at > static_cast<int>(order.size())) insert_at = static_cast<int>(order.size());
  order.insert(order.begin() + insert_at, k_idx);

  MoveRecord rec;
  rec.kind = MoveRecord::Kind::ShiftReorder;
  rec.before = base;
  rec.circle_perm.assign(k, -1);
  for (int pos = 0; pos < k; ++pos) rec.circle_perm[order[pos]] = pos;

  CurveComplex out = base;
  std::vector<Circle> circles(k);
  for (int old = 0; old < k; ++old) {
    circles[rec.circle_perm[old]] = base.circles[old];
    circles[rec.circle_perm[old]].index = rec.circle_perm[old];
  }
  out.circles = circles;
  for (Arc& a : out.arcs) a.circle = rec.circle_perm[a.circle];
  for (Region& r : out.regions)
    for (FreeBoundary& f : r.free_sides) f.circle = rec.circle_perm[f.circle];
  rec.after = std::move(out);
  rec.region_image.resize(base.num_regions());
  for (RegionId r = 0; r < base.num_regions(); ++r) rec.region_image[r] = r;
  return rec;
}

bool isomorphic(const CurveComplex& a, const CurveComplex& b) {
  if (a.genus != b.genus || a.num_vertices() != b.num_vertices() ||
      a.num_arcs() != b.num_arcs() || a.num_circles() != b.num_circles() ||
      a.num_regions() != b.num_regions())
    return false;
  const int V = a.num_vertices();
  if (V == 0) {
    // crossing-free complexes: compare circle families and region shapes
    std::multiset<std::tuple<int, int, int>> ra, rb;
    for (const Region& r : a.regions)
      ra.insert({r.genus, static_cast<int>(r.cycles.size()), static_cast<int>(r.free_sides.size())});
    for (const Region& r : b.regions)
      rb.insert({r.genus, static_cast<int>(r.cycles.size()), static_cast<int>(r.free_sides.size())});
    return ra == rb;
  }

  // try seeds: vertex 0 of a onto every (vertex, rotation offset) of b
  for (VertexId seed = 0; seed < V; ++seed)
    for (int off = 0; off < 4; ++off) {
      std::vector<int> vmap(V, -1), amap(a.num_arcs(), -1), slot_off(V, -1);
      vmap[0] = seed;
      slot_off[0] = off;
      std::vector<VertexId> queue = {0};
      bool ok = true;
      while (!queue.empty() && ok) {
        VertexId v = queue.back();
        queue.pop_back();
        for (int q = 0; q < 4 && ok; ++q) {
          const ArcEnd& ea = a.vertices[v].ends[q];
          const ArcEnd& eb = b.vertices[vmap[v]].ends[(q + slot_off[v]) % 4];
          if (ea.kind != eb.kind) { ok = false; break; }
          if (amap[ea.arc] == -1) {
            amap[ea.arc] = eb.arc;
            // propagate to the far endpoint
            VertexId fa = ea.kind == EndKind::Tail ? a.arcs[ea.arc].to : a.arcs[ea.arc].from;
            VertexId fb = eb.kind == EndKind::Tail ? b.arcs[eb.arc].to : b.arcs[eb.arc].from;
            EndKind far_kind = ea.kind == EndKind::Tail ? EndKind::Head : EndKind::Tail;
            int qa = -1, qb = -1;
            for (int t = 0; t < 4; ++t) {
              if (a.vertices[fa].ends[t] == ArcEnd{ea.arc, far_kind}) qa = t;
              if (b.vertices[fb].ends[t] == ArcEnd{eb.arc, far_kind}) qb = t;
            }
            if (qa < 0 || qb < 0) { ok = false; break; }
            if (vmap[fa] == -1) {
              vmap[fa] = fb;
              slot_off[fa] = ((qb - qa) % 4 + 4) % 4;
              queue.push_back(fa);
            } else if (vmap[fa] != fb || slot_off[fa] != ((qb - qa) % 4 + 4) % 4) {
              ok = false;
            }
          } else if (amap[ea.arc] != eb.arc) {
            ok = false;
          }
        }
      }
      if (!ok) continue;
      for (int v = 0; v < V; ++v)
        if (vmap[v] == -1) ok = false; // disconnected: give up on this seed
      if (!ok) continue;
      // circles must map to circles with matching family
      std::vector<int> cmap(a.num_circles(), -1);
      for (ArcId x = 0; x < a.num_arcs() && ok; ++x) {
        CircleId ca = a.arcs[x].circle, cb = b.arcs[amap[x]].circle;
        if (cmap[ca] == -1) cmap[ca] = cb;
        else if (cmap[ca] != cb) ok = false;
      }
      if (!ok) continue;
      for (CircleId c = 0; c < a.num_circles(); ++c)
        if (cmap[c] >= 0 && a.circles[c].family != b.circles[cmap[c]].family) ok = false;
      if (!ok) continue;
      // regions: canonical cycle multisets must match
      std::multiset<std::pair<int, std::multiset<std::vector<HalfEdge>>>> rsa, rsb;
      for (const Region& r : a.regions) {
        std::multiset<std::vector<HalfEdge>> cycs;
        for (const auto& cyc : r.cycles) {
          std::vector<HalfEdge> hc;
          for (const auto& e : cyc) {
            HalfEdge h = entry_half_edge(e);
            hc.push_back(HalfEdge{amap[h.arc], h.forward});
          }
          cycs.insert(canonical_cycle(hc));
        }
        rsa.insert({r.genus, cycs});
      }
      for (const Region& r : b.regions) {
        std::multiset<std::vector<HalfEdge>> cycs;
        for (const auto& cyc : r.cycles) {
          std::vector<HalfEdge> hc;
          for (const auto& e : cyc) hc.push_back(entry_half_edge(e));
          cycs.insert(canonical_cycle(hc));
        }
        rsb.insert({r.genus, cycs});
      }
      if (rsa == rsb) return true;
    }
  return false;
}

SectorPreservationReport verify_sector_preservation(const MoveRecord& rec) {
  SectorPreservationReport rep;
  MultiDiagram d0 = perturb(rec.before, 1);
  MultiDiagram d1 = perturb(rec.after, 1);
  SectorContext sc0 = sector_context(d0.merged);
  SectorContext sc1 = sector_context(d1.merged);

  const auto& perm = rec.circle_perm;
  auto carry = [&](const Generator& g) -> Generator {
    Generator out;
    out.family_a = g.family_a;
    out.family_b = g.family_b;
    int k = static_cast<int>(g.entries.size());
    out.entries.assign(k, -1);
    out.perm.assign(k, -1);
    for (int i = 0; i < k; ++i) {
      const MdVertexInfo& info = d0.vertex_info[g.entries[i]];
      VertexId nv;
      if (info.kind == MdVertexInfo::Kind::Zone) {
        nv = d1.zone_vertex(perm[info.base_circle], info.zone,
                            std::min(info.level_u, info.level_w),
                            std::max(info.level_u, info.level_w));
      } else {
        nv = d1.grid_vertex(info.base_vertex, info.level_i, info.level_j);
      }
      out.entries[perm[i]] = nv;
      out.perm[perm[i]] = perm[g.perm[i]];
    }
    return out;
  };

  auto gens = enumerate_generators(d0, 1, 2);
  std::vector<Generator> carried;
  auto after_gens = enumerate_generators(d1, 1, 2);
  std::set<Generator> after_set(after_gens.begin(), after_gens.end());
  for (const auto& g : gens) {
    Generator cg = carry(g);
    if (!after_set.count(cg)) {
      rep.mismatches.push_back("carried generator is not a generator of the new diagram");
      return rep;
    }
    carried.push_back(std::move(cg));
  }

  for (size_t x = 0; x < gens.size(); ++x)
    for (size_t y = x + 1; y < gens.size(); ++y) {
      bool before_zero = epsilon(d0, sc0, gens[x], gens[y]).zero();
      bool after_zero = epsilon(d1, sc1, carried[x], carried[y]).zero();
      ++rep.pairs_checked;
      if (before_zero != after_zero) {
        std::ostringstream os;
        os << "sector partition broken for generator pair (" << x << "," << y << ")";
        rep.mismatches.push_back(os.str());
      }
    }
  rep.ok = rep.mismatches.empty();
  return rep;
}

} // namespace sd
