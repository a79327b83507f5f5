#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sd {

/// Z2 vector over a finite ordered basis, stored as a bitset.
struct Z2Vec {
  std::vector<uint64_t> bits;
  explicit Z2Vec(int dim = 0) : bits((dim + 63) / 64, 0) {}
  bool get(int i) const { return (bits[i >> 6] >> (i & 63)) & 1u; }
  void flip(int i) { bits[i >> 6] ^= uint64_t(1) << (i & 63); }
  void operator^=(const Z2Vec& o) {
    for (size_t w = 0; w < bits.size(); ++w) bits[w] ^= o.bits[w];
  }
  bool is_zero() const {
    for (uint64_t w : bits)
      if (w) return false;
    return true;
  }
  bool operator==(const Z2Vec&) const = default;
  bool operator<(const Z2Vec& o) const { return bits < o.bits; }
};

using Tuple = std::vector<int>; // basis indices

/// Weak A-infinity algebra over Z2: finite basis, sparse multilinear maps
/// m_0 .. m_cap. Arities above the cap are unspecified, never assumed zero.
struct WeakAInfinityAlgebra {
  std::string name;
  std::vector<std::string> basis;
  int cap = 0;
  std::map<Tuple, Z2Vec> maps; // key size = arity; m_0 keyed by the empty tuple

  int dim() const { return static_cast<int>(basis.size()); }
  int label_index(const std::string& label) const;
  /// value of m_n on a basis tuple (zero if unset); tuple size must be <= cap
  Z2Vec evaluate(const Tuple& args) const;
  void set_map(const Tuple& args, const Z2Vec& value);
};

struct AInfMorphism {
  std::string name;
  const WeakAInfinityAlgebra* source = nullptr;
  const WeakAInfinityAlgebra* target = nullptr;
  int cap = 0;
  std::map<Tuple, Z2Vec> maps; // f_n for n >= 1

  Z2Vec evaluate(const Tuple& args) const;
  void set_map(const Tuple& args, const Z2Vec& value);
};

struct AInfHomotopy {
  std::string name;
  const WeakAInfinityAlgebra* source = nullptr;
  const WeakAInfinityAlgebra* target = nullptr;
  int cap = 0;
  std::map<Tuple, Z2Vec> maps; // H_n for n >= 1

  Z2Vec evaluate(const Tuple& args) const;
};

/// One defect of a relation check.
struct RelationDefect {
  int n = 0;
  Tuple args;
  Z2Vec defect;
};

struct RelationReport {
  enum class Status { Pass, Fail, NotCheckable };
  std::vector<Status> by_arity; // indexed by n = 0..up_to
  std::vector<RelationDefect> defects;
  std::string missing; // human-readable cap diagnosis when NotCheckable
  bool all_pass() const {
    for (Status s : by_arity)
      if (s != Status::Pass) return false;
    return true;
  }
};

/// A-infinity relation: for all n and tuples,
///   sum_{i+j=n+1} sum_l m_i(a_1 .. a_{l-1}, m_j(a_l ..), .. a_n) = 0.
RelationReport check_relations(const WeakAInfinityAlgebra& A, int up_to);

/// Morphism relation, standard weak form consistent with the A-infinity
/// relation and composition: f-insertions of m equal target-m of f-blocks.
RelationReport check_morphism(const AInfMorphism& f, int up_to);

/// Composition (g o f)_n = sum over block decompositions, truncated at the
/// common cap. Associative on the nose.
AInfMorphism compose(const AInfMorphism& g, const AInfMorphism& f);

AInfMorphism identity_morphism(const WeakAInfinityAlgebra& A);

/// Homotopy relation: f_n + g_n = sum (f-blocks, H-block, g-blocks) insertions
/// + sum H(m-insertions).
RelationReport check_homotopy(const AInfMorphism& f, const AInfMorphism& g,
                              const AInfHomotopy& H, int up_to);

struct EquivalenceReport {
  bool ok = false;
  RelationReport left;  // H1 : g_inv o f => id_source
  RelationReport right; // H2 : f o g_inv => id_target
};
EquivalenceReport verify_homotopy_equivalence(const AInfMorphism& f, const AInfMorphism& g_inv,
                                              const AInfHomotopy& H1, const AInfHomotopy& H2,
                                              int up_to);

} // namespace sd
