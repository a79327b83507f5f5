#include "algebra_io.hpp"

#include <fstream>
#include <sstream>

namespace sd {

namespace {

std::vector<std::pair<int, std::vector<std::string>>> tokenize(const std::string& text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
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
    if (!toks.empty()) out.emplace_back(no, std::move(toks));
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

// parse "a b : x y -> u + v" tail starting at tokens[from]:
// inputs up to "->", then value labels separated by "+" (or "0")
struct MapLine {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs; // empty means zero
};
MapLine parse_map_tail(const std::vector<std::string>& t, size_t from, int line) {
  MapLine m;
  size_t i = from;
  while (i < t.size() && t[i] != "->") m.inputs.push_back(t[i++]);
  if (i == t.size()) throw ParseError(line, "missing '->' in map line");
  ++i;
  bool expect_label = true;
  for (; i < t.size(); ++i) {
    if (t[i] == "+") {
      if (expect_label) throw ParseError(line, "misplaced '+'");
      expect_label = true;
    } else {
      if (!expect_label) throw ParseError(line, "missing '+' between labels");
      if (t[i] != "0") m.outputs.push_back(t[i]);
      expect_label = false;
    }
  }
  if (expect_label) throw ParseError(line, "missing value after '->'");
  return m;
}

Z2Vec value_of(const WeakAInfinityAlgebra& A, const std::vector<std::string>& labels, int line) {
  Z2Vec v(A.dim());
  for (const auto& s : labels) {
    try {
      v.flip(A.label_index(s));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
  }
  return v;
}

Tuple tuple_of(const WeakAInfinityAlgebra& A, const std::vector<std::string>& labels, int line) {
  Tuple t;
  for (const auto& s : labels) {
    try {
      t.push_back(A.label_index(s));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
  }
  return t;
}

} // namespace

const WeakAInfinityAlgebra* AlgebraDocument::algebra(const std::string& name) const {
  for (const auto& a : algebras)
    if (a.name == name) return &a;
  return nullptr;
}
const AInfMorphism* AlgebraDocument::morphism(const std::string& name) const {
  for (const auto& f : morphisms)
    if (f.name == name) return &f;
  return nullptr;
}
const AInfHomotopy* AlgebraDocument::homotopy(const std::string& name) const {
  for (const auto& h : homotopies)
    if (h.name == name) return &h;
  return nullptr;
}

AlgebraDocument parse_algebras(const std::string& text) {
  auto lines = tokenize(text);
  AlgebraDocument doc;
  size_t at = 0;
  if (lines.empty() || lines[0].second != std::vector<std::string>{"ainf", "1"})
    throw ParseError(lines.empty() ? 1 : lines[0].first, "expected header 'ainf 1'");
  ++at;
  while (at < lines.size()) {
    auto& [no, t] = lines[at];
    if (t[0] == "algebra") {
      if (t.size() != 2) throw ParseError(no, "expected 'algebra <name>'");
      WeakAInfinityAlgebra A;
      A.name = t[1];
      ++at;
      {
        auto& [n2, t2] = lines.at(at);
        if (t2[0] != "basis") throw ParseError(n2, "expected 'basis <labels...>'");
        for (size_t i = 1; i < t2.size(); ++i) A.basis.push_back(t2[i]);
        ++at;
      }
      {
        auto& [n2, t2] = lines.at(at);
        if (t2.size() != 2 || t2[0] != "cap") throw ParseError(n2, "expected 'cap <n>'");
        A.cap = to_int(t2[1], n2);
        ++at;
      }
      while (at < lines.size() && lines[at].second[0] == "m") {
        auto& [n2, t2] = lines[at];
        if (t2.size() < 3 || t2[2] != ":") throw ParseError(n2, "expected 'm <n> : ... -> ...'");
        int arity = to_int(t2[1], n2);
        MapLine m = parse_map_tail(t2, 3, n2);
        if (static_cast<int>(m.inputs.size()) != arity)
          throw ParseError(n2, "arity does not match the input count");
        A.set_map(tuple_of(A, m.inputs, n2), value_of(A, m.outputs, n2));
        ++at;
      }
      if (at >= lines.size() || lines[at].second != std::vector<std::string>{"end"})
        throw ParseError(lines[at - 1].first, "expected 'end' after the algebra");
      ++at;
      doc.algebras.push_back(std::move(A));
    } else {
      break; // morphism/homotopy sections follow
    }
  }
  // second loop for morphisms/homotopies with the final grammar
  for (; at < lines.size();) {
    auto& [no, t] = lines[at];
    if (t[0] != "morphism" && t[0] != "homotopy")
      throw ParseError(no, "expected 'morphism' or 'homotopy' section");
    bool is_h = t[0] == "homotopy";
    if (t.size() != 6 || t[4] != "cap")
      throw ParseError(no, "expected '" + t[0] + " <name> <source> <target> cap <n>'");
    const WeakAInfinityAlgebra* src = doc.algebra(t[2]);
    const WeakAInfinityAlgebra* tgt = doc.algebra(t[3]);
    if (!src) throw ParseError(no, "unknown source algebra '" + t[2] + "'");
    if (!tgt) throw ParseError(no, "unknown target algebra '" + t[3] + "'");
    int cap = to_int(t[5], no);
    std::string name = t[1];
    ++at;
    std::map<Tuple, Z2Vec> maps;
    while (at < lines.size() && lines[at].second[0] == name) {
      auto& [n2, t2] = lines[at];
      if (t2.size() < 3 || t2[2] != ":")
        throw ParseError(n2, "expected '" + name + " <n> : ... -> ...'");
      int arity = to_int(t2[1], n2);
      MapLine m = parse_map_tail(t2, 3, n2);
      if (static_cast<int>(m.inputs.size()) != arity)
        throw ParseError(n2, "arity does not match the input count");
      if (arity < 1 || arity > cap) throw ParseError(n2, "arity out of range");
      Z2Vec v = value_of(*tgt, m.outputs, n2);
      if (!v.is_zero()) maps[tuple_of(*src, m.inputs, n2)] = v;
      ++at;
    }
    if (at >= lines.size() || lines[at].second != std::vector<std::string>{"end"})
      throw ParseError(lines[at - 1].first, "expected 'end' after the section");
    ++at;
    if (is_h) {
      AInfHomotopy H;
      H.name = name;
      H.source = src;
      H.target = tgt;
      H.cap = cap;
      H.maps = std::move(maps);
      doc.homotopies.push_back(std::move(H));
    } else {
      AInfMorphism f;
      f.name = name;
      f.source = src;
      f.target = tgt;
      f.cap = cap;
      f.maps = std::move(maps);
      doc.morphisms.push_back(std::move(f));
    }
  }
  return doc;
}

AlgebraDocument load_algebras(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebras(ss.str());
}

std::string emit_algebras(const AlgebraDocument& doc) {
  std::ostringstream os;
  os << "ainf 1\n";
  auto emit_value = [&](const WeakAInfinityAlgebra& tgt, const Z2Vec& v) {
    bool any = false;
    for (int b = 0; b < tgt.dim(); ++b)
      if (v.get(b)) {
        os << (any ? " + " : "") << tgt.basis[b];
        any = true;
      }
    if (!any) os << "0";
  };
  for (const auto& A : doc.algebras) {
    os << "algebra " << A.name << "\n";
    os << "basis";
    for (const auto& b : A.basis) os << " " << b;
    os << "\n";
    os << "cap " << A.cap << "\n";
    for (const auto& [k, v] : A.maps) {
      os << "m " << k.size() << " :";
      for (int i : k) os << " " << A.basis[i];
      os << " -> ";
      emit_value(A, v);
      os << "\n";
    }
    os << "end\n";
  }
  auto emit_maps = [&](const std::string& name, const WeakAInfinityAlgebra& src,
                       const WeakAInfinityAlgebra& tgt, const std::map<Tuple, Z2Vec>& maps) {
    for (const auto& [k, v] : maps) {
      os << name << " " << k.size() << " :";
      for (int i : k) os << " " << src.basis[i];
      os << " -> ";
      emit_value(tgt, v);
      os << "\n";
    }
  };
  for (const auto& f : doc.morphisms) {
    os << "morphism " << f.name << " " << f.source->name << " " << f.target->name << " cap "
       << f.cap << "\n";
    emit_maps(f.name, *f.source, *f.target, f.maps);
    os << "end\n";
  }
  for (const auto& h : doc.homotopies) {
    os << "homotopy " << h.name << " " << h.source->name << " " << h.target->name << " cap "
       << h.cap << "\n";
    emit_maps(h.name, *h.source, *h.target, h.maps);
    os << "end\n";
  }
  return os.str();
}

} // namespace sd
