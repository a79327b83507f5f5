#pragma once

#include <optional>
#include <vector>

#include "zmatrix.hpp"

namespace sd {

using RatVec = std::vector<Rat>;

/// min c.x subject to A x = b, x >= 0, over exact rationals.
struct SimplexResult {
  enum Status { OPTIMAL, INFEASIBLE, UNBOUNDED } status = INFEASIBLE;
  Rat objective;
  RatVec x;
};
SimplexResult simplex_min(const std::vector<RatVec>& A, const RatVec& b, const RatVec& c);

/// Decision data for the mixed-sign property of an integer lattice.
///
/// Exactly one of the two alternatives holds for the lattice spanned by
/// `basis` inside Z^dim: either some nonzero lattice vector is one-signed
/// (componentwise >= 0, not all zero), or there is a strictly positive
/// rational functional vanishing on the whole lattice.
struct SignAlternative {
  bool has_one_signed = false;
  ZVec one_signed;          // integer witness, >= 0 and nonzero, when present
  RatVec certificate;       // strictly positive w with w . q = 0 on the lattice, otherwise
};
SignAlternative one_signed_alternative(const std::vector<ZVec>& basis, int dim);

} // namespace sd
