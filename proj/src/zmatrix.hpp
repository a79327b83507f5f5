#pragma once

#include <optional>
#include <vector>

#include "ints.hpp"

namespace sd {

using ZVec = std::vector<Int>;

/// Dense matrix over Z with arbitrary-precision entries.
struct ZMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a; // row-major

  ZMatrix() = default;
  ZMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static ZMatrix identity(int n);
  static ZMatrix zero(int r, int c) { return ZMatrix(r, c); }
  static ZMatrix from_rows(const std::vector<ZVec>& rows_in, int ncols);

  ZMatrix operator*(const ZMatrix& o) const;
  bool operator==(const ZMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  ZVec mul_vec(const ZVec& v) const;
  ZMatrix transposed() const;
};

/// U * A * V = D, with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithForm {
  ZMatrix U, D, V;
  int rank = 0; // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const ZMatrix& A);

/// Determinant by fraction-free (Bareiss) elimination. Square input.
Int determinant(const ZMatrix& A);

/// Basis of the integer kernel lattice { v : A v = 0 }.
std::vector<ZVec> kernel_basis(const ZMatrix& A);

/// Integer solutions of A x = b.
struct LinearSolution {
  bool solvable = false;
  ZVec particular;            // one solution, if solvable
  std::vector<ZVec> kernel;   // lattice basis of homogeneous solutions
};
LinearSolution solve_integer(const ZMatrix& A, const ZVec& b);
/// Same, reusing an existing factorization of A.
LinearSolution solve_presolved(const SmithForm& s, int rows, int cols, const ZVec& b);

/// Row-style Hermite form of the lattice spanned by the given row vectors.
/// Rows are in echelon order with positive pivots; entries above a pivot are
/// reduced into [0, pivot).
struct HermiteLattice {
  int dim = 0;
  std::vector<ZVec> rows;      // echelon basis
  std::vector<int> pivot_col;  // pivot column of each row

  int rank() const { return static_cast<int>(rows.size()); }
  bool contains(const ZVec& v) const;
  /// Canonical coset representative of v modulo the lattice.
  ZVec reduce(const ZVec& v) const;
};

HermiteLattice hermite_lattice(const std::vector<ZVec>& generators, int dim);

} // namespace sd
