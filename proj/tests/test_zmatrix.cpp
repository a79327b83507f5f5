#include "doctest.h"

#include <random>

#include "zmatrix.hpp"

using namespace sd;

namespace {

ZMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  ZMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

void check_smith(const ZMatrix& A) {
  SmithForm s = smith_normal_form(A);
  // U A V = D, exactly
  CHECK(s.U * A * s.V == s.D);
  // D diagonal with nonnegative entries and divisibility chain
  for (int i = 0; i < s.D.rows; ++i)
    for (int j = 0; j < s.D.cols; ++j)
      if (i != j) CHECK(s.D.at(i, j) == 0);
  int nmin = std::min(A.rows, A.cols);
  for (int i = 0; i + 1 < nmin; ++i) {
    CHECK(s.D.at(i, i) >= 0);
    if (s.D.at(i + 1, i + 1) != 0) {
      REQUIRE(s.D.at(i, i) != 0);
      CHECK(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
    }
  }
  // unimodularity, exact
  Int du = determinant(s.U), dv = determinant(s.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
}

} // namespace

TEST_CASE("smith normal form on pinned examples") {
  SUBCASE("identity") {
    ZMatrix I = ZMatrix::identity(2);
    SmithForm s = smith_normal_form(I);
    CHECK(s.D == I);
    CHECK(s.rank == 2);
  }
  SUBCASE("diag(2,4) example") {
    // [[2,4],[6,8]]: |det| = 8, d1 = gcd of entries = 2, so D = diag(2,4).
    ZMatrix A(2, 2);
    A.at(0, 0) = 2; A.at(0, 1) = 4;
    A.at(1, 0) = 6; A.at(1, 1) = 8;
    SmithForm s = smith_normal_form(A);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(1, 1) == 4);
    CHECK(s.rank == 2);
    check_smith(A);
    Int d = determinant(A);
    CHECK(d == -8);
  }
  SUBCASE("zero matrix") {
    ZMatrix Z(3, 2);
    SmithForm s = smith_normal_form(Z);
    CHECK(s.rank == 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 2; ++j) CHECK(s.D.at(i, j) == 0);
  }
}

TEST_CASE("smith normal form randomized, exact verification") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> dim(1, 12);
    ZMatrix A = random_matrix(rng, dim(rng), dim(rng), -9, 9);
    check_smith(A);
  }
}

TEST_CASE("smith oracle: elementary operations preserve invariant factors") {
  // Build B from a known diagonal by random unimodular row/column operations;
  // the invariant factors must come back unchanged.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  ZMatrix D0(3, 3);
  D0.at(0, 0) = 1; D0.at(1, 1) = 2; D0.at(2, 2) = 6;
  ZMatrix B = D0;
  for (int step = 0; step < 25; ++step) {
    int i = rng() % 3, j = rng() % 3;
    if (i == j) continue;
    Int f = coef(rng);
    if (step % 2 == 0)
      for (int c = 0; c < 3; ++c) B.at(i, c) += f * B.at(j, c);
    else
      for (int r = 0; r < 3; ++r) B.at(r, i) += f * B.at(r, j);
  }
  SmithForm s = smith_normal_form(B);
  CHECK(s.D.at(0, 0) == 1);
  CHECK(s.D.at(1, 1) == 2);
  CHECK(s.D.at(2, 2) == 6);
  check_smith(B);
}

TEST_CASE("integer linear solve") {
  // x + 2y = 5, 3y = 6 -> y = 2, x = 1
  ZMatrix A(2, 2);
  A.at(0, 0) = 1; A.at(0, 1) = 2;
  A.at(1, 0) = 0; A.at(1, 1) = 3;
  LinearSolution s = solve_integer(A, {Int(5), Int(6)});
  REQUIRE(s.solvable);
  CHECK(A.mul_vec(s.particular) == ZVec{Int(5), Int(6)});
  CHECK(s.kernel.empty());

  // 2x = 1 has no integer solution
  ZMatrix B(1, 1);
  B.at(0, 0) = 2;
  CHECK_FALSE(solve_integer(B, {Int(1)}).solvable);

  // underdetermined: kernel has the right rank and A v = 0
  ZMatrix C(1, 3);
  C.at(0, 0) = 1; C.at(0, 1) = 1; C.at(0, 2) = 1;
  LinearSolution sc = solve_integer(C, {Int(0)});
  REQUIRE(sc.solvable);
  CHECK(sc.kernel.size() == 2);
  for (const auto& v : sc.kernel) CHECK(C.mul_vec(v) == ZVec{Int(0)});
}

TEST_CASE("kernel basis spans the kernel lattice") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    ZMatrix A = random_matrix(rng, 1 + int(rng() % 5), 1 + int(rng() % 6), -4, 4);
    auto ker = kernel_basis(A);
    for (const auto& v : ker) {
      ZVec img = A.mul_vec(v);
      for (const Int& x : img) CHECK(x == 0);
    }
    SmithForm s = smith_normal_form(A);
    CHECK(static_cast<int>(ker.size()) == A.cols - s.rank);
  }
}

TEST_CASE("hermite lattice membership and canonical reduction") {
  // lattice spanned by (2,0), (0,3) in Z^2
  HermiteLattice h = hermite_lattice({{Int(2), Int(0)}, {Int(0), Int(3)}}, 2);
  CHECK(h.rank() == 2);
  CHECK(h.contains({Int(4), Int(-3)}));
  CHECK_FALSE(h.contains({Int(1), Int(0)}));
  ZVec r = h.reduce({Int(5), Int(7)});
  CHECK(r == ZVec{Int(1), Int(1)});
  // reduction is a coset invariant
  ZVec r2 = h.reduce({Int(-1), Int(4)});
  CHECK(r2 == r);

  // degenerate lattice
  HermiteLattice h2 = hermite_lattice({{Int(2), Int(4)}}, 2);
  CHECK(h2.rank() == 1);
  CHECK(h2.contains({Int(-6), Int(-12)}));
  CHECK_FALSE(h2.contains({Int(2), Int(2)}));
}
