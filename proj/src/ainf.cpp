#include "ainf.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace sd {

namespace {

// all ways to split r into ordered positive parts; r = 0 gives the empty split
std::vector<std::vector<int>> compositions(int r) {
  std::vector<std::vector<int>> out;
  if (r == 0) {
    out.push_back({});
    return out;
  }
  for (int first = 1; first <= r; ++first)
    for (auto rest : compositions(r - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

using Eval = std::function<Z2Vec(const Tuple&)>;

// multilinear evaluation with vector-valued slots: args fixed, slots[i] gives
// a Z2 vector to substitute at position pos[i]
Z2Vec eval_with_vectors(const Eval& f, int dim, Tuple args,
                        const std::vector<std::pair<int, Z2Vec>>& slots, size_t at = 0) {
  if (at == slots.size()) return f(args);
  Z2Vec acc(dim);
  const auto& [pos, vec] = slots[at];
  for (int b = 0; b < dim; ++b) {
    if (!vec.get(b)) continue;
    args[pos] = b;
    acc ^= eval_with_vectors(f, dim, args, slots, at + 1);
  }
  return acc;
}

bool advance(Tuple& t, int dim) {
  for (size_t i = 0; i < t.size(); ++i) {
    if (++t[i] < dim) return true;
    t[i] = 0;
  }
  return false;
}

bool map_is_zero(const std::map<Tuple, Z2Vec>& maps, int arity) {
  for (const auto& [k, v] : maps)
    if (static_cast<int>(k.size()) == arity && !v.is_zero()) return false;
  return true;
}

} // namespace

int WeakAInfinityAlgebra::label_index(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (basis[i] == label) return i;
  throw std::invalid_argument("unknown basis label: " + label);
}

Z2Vec WeakAInfinityAlgebra::evaluate(const Tuple& args) const {
  if (static_cast<int>(args.size()) > cap)
    throw std::out_of_range("arity beyond the stored cap");
  auto it = maps.find(args);
  return it == maps.end() ? Z2Vec(dim()) : it->second;
}

void WeakAInfinityAlgebra::set_map(const Tuple& args, const Z2Vec& value) {
  if (static_cast<int>(args.size()) > cap) throw std::out_of_range("arity beyond the cap");
  if (value.is_zero()) maps.erase(args);
  else maps[args] = value;
}

Z2Vec AInfMorphism::evaluate(const Tuple& args) const {
  if (args.empty() || static_cast<int>(args.size()) > cap)
    throw std::out_of_range("morphism arity out of range");
  auto it = maps.find(args);
  return it == maps.end() ? Z2Vec(target->dim()) : it->second;
}

void AInfMorphism::set_map(const Tuple& args, const Z2Vec& value) {
  if (args.empty() || static_cast<int>(args.size()) > cap)
    throw std::out_of_range("morphism arity out of range");
  if (value.is_zero()) maps.erase(args);
  else maps[args] = value;
}

Z2Vec AInfHomotopy::evaluate(const Tuple& args) const {
  if (args.empty() || static_cast<int>(args.size()) > cap)
    throw std::out_of_range("homotopy arity out of range");
  auto it = maps.find(args);
  return it == maps.end() ? Z2Vec(target->dim()) : it->second;
}

RelationReport check_relations(const WeakAInfinityAlgebra& A, int up_to) {
  RelationReport rep;
  const int dim = A.dim();
  bool m0_nonzero = !A.evaluate({}).is_zero();
  for (int n = 0; n <= up_to; ++n) {
    int needed = m0_nonzero ? n + 1 : n;
    if (needed > A.cap || n > A.cap) {
      rep.by_arity.push_back(RelationReport::Status::NotCheckable);
      std::ostringstream os;
      os << "relation level " << n << " needs arity " << needed << " > cap " << A.cap;
      if (rep.missing.empty()) rep.missing = os.str();
      continue;
    }
    bool fail = false;
    Tuple args(n, 0);
    bool more = true;
    if (n == 0) more = true;
    while (more) {
      Z2Vec defect(dim);
      for (int j = 0; j <= n; ++j) {
        for (int l = 1; l <= n - j + 1; ++l) {
          Tuple inner(args.begin() + (l - 1), args.begin() + (l - 1) + j);
          Z2Vec mj = A.evaluate(inner);
          Tuple outer;
          outer.reserve(n - j + 1);
          for (int t = 0; t < l - 1; ++t) outer.push_back(args[t]);
          outer.push_back(-1); // slot
          for (int t = l - 1 + j; t < n; ++t) outer.push_back(args[t]);
          defect ^= eval_with_vectors([&](const Tuple& a) { return A.evaluate(a); }, dim, outer,
                                      {{l - 1, mj}});
        }
      }
      if (!defect.is_zero()) {
        fail = true;
        rep.defects.push_back({n, args, defect});
      }
      more = n > 0 && advance(args, dim);
      if (n == 0) more = false;
    }
    rep.by_arity.push_back(fail ? RelationReport::Status::Fail : RelationReport::Status::Pass);
  }
  return rep;
}

RelationReport check_morphism(const AInfMorphism& f, int up_to) {
  RelationReport rep;
  const WeakAInfinityAlgebra& A = *f.source;
  const WeakAInfinityAlgebra& B = *f.target;
  const int sdim = A.dim(), tdim = B.dim();
  bool m0_nonzero = !A.evaluate({}).is_zero();
  for (int n = 0; n <= up_to; ++n) {
    int f_needed = m0_nonzero ? n + 1 : std::max(n, 1);
    if (n > A.cap || n > B.cap || f_needed > f.cap) {
      rep.by_arity.push_back(RelationReport::Status::NotCheckable);
      std::ostringstream os;
      os << "morphism level " << n << " exceeds a cap (source " << A.cap << ", target " << B.cap
         << ", morphism " << f.cap << ")";
      if (rep.missing.empty()) rep.missing = os.str();
      continue;
    }
    bool fail = false;
    Tuple args(n, 0);
    bool more = true;
    while (more) {
      Z2Vec defect(tdim);
      // f-insertions of source maps
      for (int j = 0; j <= n; ++j)
        for (int l = 1; l <= n - j + 1; ++l) {
          Tuple inner(args.begin() + (l - 1), args.begin() + (l - 1) + j);
          Z2Vec mj = A.evaluate(inner);
          Tuple outer;
          for (int t = 0; t < l - 1; ++t) outer.push_back(args[t]);
          outer.push_back(-1);
          for (int t = l - 1 + j; t < n; ++t) outer.push_back(args[t]);
          defect ^= eval_with_vectors([&](const Tuple& a) { return f.evaluate(a); }, sdim, outer,
                                      {{l - 1, mj}});
        }
      // target maps of f-blocks
      if (n == 0) {
        defect ^= B.evaluate({});
      } else {
        for (const auto& comp : compositions(n)) {
          int s = static_cast<int>(comp.size());
          std::vector<std::pair<int, Z2Vec>> slots;
          int off = 0;
          for (int t = 0; t < s; ++t) {
            Tuple block(args.begin() + off, args.begin() + off + comp[t]);
            slots.emplace_back(t, f.evaluate(block));
            off += comp[t];
          }
          Tuple outer(s, -1);
          defect ^= eval_with_vectors([&](const Tuple& a) { return B.evaluate(a); }, tdim, outer,
                                      slots);
        }
      }
      if (!defect.is_zero()) {
        fail = true;
        rep.defects.push_back({n, args, defect});
      }
      more = n > 0 && advance(args, sdim);
    }
    rep.by_arity.push_back(fail ? RelationReport::Status::Fail : RelationReport::Status::Pass);
  }
  return rep;
}

AInfMorphism compose(const AInfMorphism& g, const AInfMorphism& f) {
  if (f.target != g.source)
    throw std::invalid_argument("compose: target of the first is not the source of the second");
  AInfMorphism out;
  out.name = g.name + "." + f.name;
  out.source = f.source;
  out.target = g.target;
  out.cap = std::min(f.cap, g.cap);
  const int sdim = f.source->dim();
  const int tdim = g.target->dim();
  for (int n = 1; n <= out.cap; ++n) {
    Tuple args(n, 0);
    bool more = true;
    while (more) {
      Z2Vec val(tdim);
      for (const auto& comp : compositions(n)) {
        int s = static_cast<int>(comp.size());
        std::vector<std::pair<int, Z2Vec>> slots;
        int off = 0;
        for (int t = 0; t < s; ++t) {
          Tuple block(args.begin() + off, args.begin() + off + comp[t]);
          slots.emplace_back(t, f.evaluate(block));
          off += comp[t];
        }
        Tuple outer(s, -1);
        val ^= eval_with_vectors([&](const Tuple& a) { return g.evaluate(a); },
                                 f.target->dim(), outer, slots);
      }
      if (!val.is_zero()) out.maps[args] = val;
      more = advance(args, sdim);
    }
  }
  return out;
}

AInfMorphism identity_morphism(const WeakAInfinityAlgebra& A) {
  AInfMorphism id;
  id.name = "id";
  id.source = &A;
  id.target = &A;
  id.cap = A.cap + 2;
  Z2Vec e(A.dim());
  for (int b = 0; b < A.dim(); ++b) {
    Z2Vec v(A.dim());
    v.flip(b);
    id.maps[{b}] = v;
  }
  return id;
}

RelationReport check_homotopy(const AInfMorphism& f, const AInfMorphism& g,
                              const AInfHomotopy& H, int up_to) {
  if (f.source != g.source || f.target != g.target || H.source != f.source ||
      H.target != f.target)
    throw std::invalid_argument("homotopy endpoints do not match");
  RelationReport rep;
  const WeakAInfinityAlgebra& A = *f.source;
  const WeakAInfinityAlgebra& B = *f.target;
  const int sdim = A.dim(), tdim = B.dim();
  bool m0_nonzero = !A.evaluate({}).is_zero();
  for (int n = 0; n <= up_to; ++n) {
    int h_needed = m0_nonzero ? n + 1 : std::max(n, 1);
    if (n > A.cap || n > B.cap || (n > 0 && (n > f.cap || n > g.cap)) || h_needed > H.cap) {
      rep.by_arity.push_back(RelationReport::Status::NotCheckable);
      std::ostringstream os;
      os << "homotopy level " << n << " exceeds a cap";
      if (rep.missing.empty()) rep.missing = os.str();
      continue;
    }
    bool fail = false;
    Tuple args(n, 0);
    bool more = true;
    while (more) {
      Z2Vec defect(tdim);
      if (n > 0) {
        defect ^= f.evaluate(args);
        defect ^= g.evaluate(args);
      }
      // insertion sum: f-blocks, one H-block, g-blocks
      for (int r = 0; r <= n; ++r)
        for (int s = 1; r + s <= n; ++s) {
          int t = n - r - s;
          Tuple hblock(args.begin() + r, args.begin() + r + s);
          Z2Vec hv = H.evaluate(hblock);
          for (const auto& fcomp : compositions(r))
            for (const auto& gcomp : compositions(t)) {
              int p = static_cast<int>(fcomp.size());
              int q = static_cast<int>(gcomp.size());
              std::vector<std::pair<int, Z2Vec>> slots;
              int off = 0;
              for (int u = 0; u < p; ++u) {
                Tuple block(args.begin() + off, args.begin() + off + fcomp[u]);
                slots.emplace_back(u, f.evaluate(block));
                off += fcomp[u];
              }
              slots.emplace_back(p, hv);
              off += s;
              for (int u = 0; u < q; ++u) {
                Tuple block(args.begin() + off, args.begin() + off + gcomp[u]);
                slots.emplace_back(p + 1 + u, g.evaluate(block));
                off += gcomp[u];
              }
              Tuple outer(p + 1 + q, -1);
              defect ^= eval_with_vectors([&](const Tuple& a) { return B.evaluate(a); }, tdim,
                                          outer, slots);
            }
        }
      // H of m-insertions
      for (int j = 0; j <= n; ++j)
        for (int l = 1; l <= n - j + 1; ++l) {
          Tuple inner(args.begin() + (l - 1), args.begin() + (l - 1) + j);
          Z2Vec mj = A.evaluate(inner);
          Tuple outer;
          for (int u = 0; u < l - 1; ++u) outer.push_back(args[u]);
          outer.push_back(-1);
          for (int u = l - 1 + j; u < n; ++u) outer.push_back(args[u]);
          defect ^= eval_with_vectors([&](const Tuple& a) { return H.evaluate(a); }, sdim, outer,
                                      {{l - 1, mj}});
        }
      if (!defect.is_zero()) {
        fail = true;
        rep.defects.push_back({n, args, defect});
      }
      more = n > 0 && advance(args, sdim);
    }
    rep.by_arity.push_back(fail ? RelationReport::Status::Fail : RelationReport::Status::Pass);
  }
  return rep;
}

EquivalenceReport verify_homotopy_equivalence(const AInfMorphism& f, const AInfMorphism& g_inv,
                                              const AInfHomotopy& H1, const AInfHomotopy& H2,
                                              int up_to) {
  EquivalenceReport rep;
  AInfMorphism gf = compose(g_inv, f);
  AInfMorphism fg = compose(f, g_inv);
  AInfMorphism id_src = identity_morphism(*f.source);
  AInfMorphism id_tgt = identity_morphism(*f.target);
  rep.left = check_homotopy(gf, id_src, H1, up_to);
  rep.right = check_homotopy(fg, id_tgt, H2, up_to);
  rep.ok = rep.left.all_pass() && rep.right.all_pass();
  return rep;
}

} // namespace sd
