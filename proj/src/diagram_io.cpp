#include "diagram_io.hpp"

#include <fstream>
#include <sstream>

namespace sd {

namespace {

struct Lines {
  std::vector<std::pair<int, std::vector<std::string>>> rows; // (line number, tokens)
};

Lines tokenize(const std::string& text) {
  Lines out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) {
      if (t[0] == '#') break;
      toks.push_back(t);
    }
    if (!toks.empty()) out.rows.emplace_back(no, std::move(toks));
  }
  return out;
}

int to_int(const std::string& s, int line) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

// "12L" / "12R" and "12t" / "12h"
std::pair<int, char> split_suffix(const std::string& s, int line, const char* allowed) {
  if (s.size() < 2) throw ParseError(line, "expected id with suffix, got '" + s + "'");
  char c = s.back();
  if (c != allowed[0] && c != allowed[1])
    throw ParseError(line, std::string("expected suffix '") + allowed[0] + "' or '" + allowed[1] +
                               "' in '" + s + "'");
  return {to_int(s.substr(0, s.size() - 1), line), c};
}

} // namespace

CurveComplex parse_diagram(const std::string& text) {
  Lines lines = tokenize(text);
  size_t at = 0;
  auto need = [&](const char* what) -> std::pair<int, std::vector<std::string>>& {
    if (at >= lines.rows.size())
      throw ParseError(lines.rows.empty() ? 1 : lines.rows.back().first,
                       std::string("unexpected end of file, expected ") + what);
    return lines.rows[at];
  };

  CurveComplex cx;
  {
    auto& [no, t] = need("header");
    if (t.size() != 2 || t[0] != "surfdiag" || t[1] != "1")
      throw ParseError(no, "expected header 'surfdiag 1'");
    ++at;
  }
  {
    auto& [no, t] = need("genus");
    if (t.size() != 2 || t[0] != "genus") throw ParseError(no, "expected 'genus <g>'");
    cx.genus = to_int(t[1], no);
    ++at;
  }
  int ncircles = 0, nvertices = 0, narcs = 0, nregions = 0;
  {
    auto& [no, t] = need("counts");
    if (t.size() != 5 || t[0] != "counts")
      throw ParseError(no, "expected 'counts <circles> <vertices> <arcs> <regions>'");
    ncircles = to_int(t[1], no);
    nvertices = to_int(t[2], no);
    narcs = to_int(t[3], no);
    nregions = to_int(t[4], no);
    ++at;
  }
  if (at < lines.rows.size() && lines.rows[at].second[0] == "sectionclass") {
    auto& [no, t] = lines.rows[at];
    ZVec v;
    for (size_t i = 1; i < t.size(); ++i) v.push_back(to_int(t[i], no));
    cx.section_class = v;
    ++at;
  }
  cx.circles.resize(ncircles);
  cx.vertices.resize(nvertices);
  cx.arcs.resize(narcs);
  cx.regions.resize(nregions);

  for (int c = 0; c < ncircles; ++c) {
    auto& [no, t] = need("circle");
    if (t.size() < 7 || t[0] != "circle" || t[2] != "index" || t[4] != "family" ||
        (t[6] != "arcs" && t[6] != "free"))
      throw ParseError(no, "expected 'circle <id> index <i> family <f> arcs|free ...'");
    if (to_int(t[1], no) != c) throw ParseError(no, "circle ids must be ascending from 0");
    Circle circ;
    circ.index = to_int(t[3], no);
    circ.family = to_int(t[5], no);
    if (t[6] == "arcs")
      for (size_t i = 7; i < t.size(); ++i) circ.arcs.push_back(to_int(t[i], no));
    else if (t.size() != 7)
      throw ParseError(no, "'free' takes no arc list");
    cx.circles[c] = std::move(circ);
    ++at;
  }
  for (int v = 0; v < nvertices; ++v) {
    auto& [no, t] = need("vertex");
    if (t.size() != 7 || t[0] != "vertex" || t[2] != "ends")
      throw ParseError(no, "expected 'vertex <id> ends <4 arc ends>'");
    if (to_int(t[1], no) != v) throw ParseError(no, "vertex ids must be ascending from 0");
    for (int q = 0; q < 4; ++q) {
      auto [arc, suf] = split_suffix(t[3 + q], no, "th");
      cx.vertices[v].ends[q] = ArcEnd{arc, suf == 't' ? EndKind::Tail : EndKind::Head};
    }
    ++at;
  }
  for (int a = 0; a < narcs; ++a) {
    auto& [no, t] = need("arc");
    if (t.size() != 8 || t[0] != "arc" || t[2] != "circle" || t[4] != "from" || t[6] != "to")
      throw ParseError(no, "expected 'arc <id> circle <c> from <v> to <v>'");
    if (to_int(t[1], no) != a) throw ParseError(no, "arc ids must be ascending from 0");
    cx.arcs[a] = Arc{to_int(t[3], no), to_int(t[5], no), to_int(t[7], no)};
    ++at;
  }
  for (int r = 0; r < nregions; ++r) {
    auto& [no, t] = need("region");
    if (t.size() != 4 || t[0] != "region" || t[2] != "genus")
      throw ParseError(no, "expected 'region <id> genus <g>'");
    if (to_int(t[1], no) != r) throw ParseError(no, "region ids must be ascending from 0");
    cx.regions[r].genus = to_int(t[3], no);
    ++at;
    while (at < lines.rows.size()) {
      auto& [lno, lt] = lines.rows[at];
      if (lt[0] == "cycle") {
        std::vector<BoundaryEntry> cyc;
        for (size_t i = 1; i < lt.size(); ++i) {
          auto [arc, suf] = split_suffix(lt[i], lno, "LR");
          cyc.push_back(BoundaryEntry{arc, suf == 'L' ? Side::Left : Side::Right});
        }
        if (cyc.empty()) throw ParseError(lno, "empty cycle");
        cx.regions[r].cycles.push_back(std::move(cyc));
        ++at;
      } else if (lt[0] == "free") {
        if (lt.size() != 2) throw ParseError(lno, "expected 'free <circle><L|R>'");
        auto [circ, suf] = split_suffix(lt[1], lno, "LR");
        cx.regions[r].free_sides.push_back(
            FreeBoundary{circ, suf == 'L' ? Side::Left : Side::Right});
        ++at;
      } else {
        break;
      }
    }
  }
  if (at != lines.rows.size())
    throw ParseError(lines.rows[at].first, "trailing content after the diagram");
  return cx;
}

CurveComplex load_diagram(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

std::string emit_diagram(const CurveComplex& cx) {
  std::ostringstream os;
  os << "surfdiag 1\n";
  os << "genus " << cx.genus << "\n";
  os << "counts " << cx.num_circles() << " " << cx.num_vertices() << " " << cx.num_arcs() << " "
     << cx.num_regions() << "\n";
  if (cx.section_class) {
    os << "sectionclass";
    for (const Int& v : *cx.section_class) os << " " << v;
    os << "\n";
  }
  for (CircleId c = 0; c < cx.num_circles(); ++c) {
    const Circle& circ = cx.circles[c];
    os << "circle " << c << " index " << circ.index << " family " << circ.family;
    if (circ.is_free()) {
      os << " free";
    } else {
      os << " arcs";
      for (ArcId a : circ.arcs) os << " " << a;
    }
    os << "\n";
  }
  for (VertexId v = 0; v < cx.num_vertices(); ++v) {
    os << "vertex " << v << " ends";
    for (const ArcEnd& e : cx.vertices[v].ends)
      os << " " << e.arc << (e.kind == EndKind::Tail ? "t" : "h");
    os << "\n";
  }
  for (ArcId a = 0; a < cx.num_arcs(); ++a)
    os << "arc " << a << " circle " << cx.arcs[a].circle << " from " << cx.arcs[a].from << " to "
       << cx.arcs[a].to << "\n";
  for (RegionId r = 0; r < cx.num_regions(); ++r) {
    const Region& reg = cx.regions[r];
    os << "region " << r << " genus " << reg.genus << "\n";
    for (const auto& cyc : reg.cycles) {
      os << "cycle";
      for (const auto& e : cyc) os << " " << e.arc << (e.side == Side::Left ? "L" : "R");
      os << "\n";
    }
    for (const auto& f : reg.free_sides)
      os << "free " << f.circle << (f.side == Side::Left ? "L" : "R") << "\n";
  }
  return os.str();
}

} // namespace sd
