#pragma once

#include <deque>
#include <string>

#include "ainf.hpp"
#include "diagram_io.hpp"

namespace sd {

/// On-disk bundle of algebras, morphisms and homotopies. Algebras live in a
/// deque so pointers held by morphisms stay valid.
struct AlgebraDocument {
  std::deque<WeakAInfinityAlgebra> algebras;
  std::deque<AInfMorphism> morphisms;
  std::deque<AInfHomotopy> homotopies;

  const WeakAInfinityAlgebra* algebra(const std::string& name) const;
  const AInfMorphism* morphism(const std::string& name) const;
  const AInfHomotopy* homotopy(const std::string& name) const;
};

AlgebraDocument parse_algebras(const std::string& text);
AlgebraDocument load_algebras(const std::string& path);
std::string emit_algebras(const AlgebraDocument& doc);

} // namespace sd
