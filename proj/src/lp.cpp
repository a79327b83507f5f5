#include "lp.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace sd {

namespace {

// Dictionary simplex with Bland's rule. Small dense problems only.
class Tableau {
public:
  // min c.x s.t. A x = b, x >= 0; b must be >= 0 on entry.
  Tableau(const std::vector<RatVec>& A, const RatVec& b, const RatVec& c)
      : m_(static_cast<int>(A.size())), n_(static_cast<int>(c.size())) {
    rows_.assign(m_, RatVec(n_ + m_ + 1));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      assert(b[i] >= Rat(0));
      for (int j = 0; j < n_; ++j) rows_[i][j] = A[i][j];
      rows_[i][n_ + i] = Rat(1); // artificial
      rows_[i][n_ + m_] = b[i];
      basis_[i] = n_ + i;
    }
    // phase I objective: sum of artificials
    obj_.assign(n_ + m_ + 1, Rat(0));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j <= n_ + m_; ++j) obj_[j] -= rows_[i][j];
    for (int i = 0; i < m_; ++i) obj_[n_ + i] += Rat(1);
    run();
    phase1_ok_ = (-obj_[n_ + m_] == Rat(0));
    if (!phase1_ok_) return;
    // drive artificials out of the basis where possible
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      int piv = -1;
      for (int j = 0; j < n_; ++j)
        if (rows_[i][j] != Rat(0)) { piv = j; break; }
      if (piv >= 0) pivot(i, piv);
      // else: redundant row, harmless
    }
    // phase II objective
    obj_.assign(n_ + m_ + 1, Rat(0));
    for (int j = 0; j < n_; ++j) obj_[j] = c[j];
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_ && obj_[basis_[i]] != Rat(0)) {
        Rat f = obj_[basis_[i]];
        for (int j = 0; j <= n_ + m_; ++j) obj_[j] -= f * rows_[i][j];
      }
    artificials_blocked_ = true;
    unbounded_ = !run();
  }

  SimplexResult result() const {
    SimplexResult r;
    if (!phase1_ok_) { r.status = SimplexResult::INFEASIBLE; return r; }
    if (unbounded_) { r.status = SimplexResult::UNBOUNDED; return r; }
    r.status = SimplexResult::OPTIMAL;
    r.x.assign(n_, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) r.x[basis_[i]] = rows_[i][n_ + m_];
    r.objective = -obj_[n_ + m_];
    return r;
  }

private:
  void pivot(int row, int col) {
    Rat p = rows_[row][col];
    for (auto& v : rows_[row]) v /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col] == Rat(0)) continue;
      Rat f = rows_[i][col];
      for (int j = 0; j <= n_ + m_; ++j) rows_[i][j] -= f * rows_[row][j];
    }
    if (obj_[col] != Rat(0)) {
      Rat f = obj_[col];
      for (int j = 0; j <= n_ + m_; ++j) obj_[j] -= f * rows_[row][j];
    }
    basis_[row] = col;
  }

  // returns false if unbounded
  bool run() {
    while (true) {
      int col = -1;
      int limit = artificials_blocked_ ? n_ : n_ + m_;
      for (int j = 0; j < limit; ++j)
        if (obj_[j] < Rat(0)) { col = j; break; } // Bland: lowest index
      if (col < 0) return true;
      int row = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (rows_[i][col] <= Rat(0)) continue;
        Rat ratio = rows_[i][n_ + m_] / rows_[i][col];
        if (row < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[row]))
          { row = i; best = ratio; }
      }
      if (row < 0) return false;
      pivot(row, col);
    }
  }

  int m_, n_;
  std::vector<RatVec> rows_;
  RatVec obj_;
  std::vector<int> basis_;
  bool phase1_ok_ = false;
  bool unbounded_ = false;
  bool artificials_blocked_ = false;
};

} // namespace

SimplexResult simplex_min(const std::vector<RatVec>& A, const RatVec& b, const RatVec& c) {
  std::vector<RatVec> A2 = A;
  RatVec b2 = b;
  for (size_t i = 0; i < b2.size(); ++i)
    if (b2[i] < Rat(0)) {
      b2[i] = -b2[i];
      for (auto& v : A2[i]) v = -v;
    }
  return Tableau(A2, b2, c).result();
}

SignAlternative one_signed_alternative(const std::vector<ZVec>& basis, int dim) {
  SignAlternative out;
  const int m = static_cast<int>(basis.size());
  if (m == 0) { // empty lattice: certificate is all-ones
    out.certificate.assign(dim, Rat(1));
    return out;
  }

  // First try the strictly positive functional: w = 1 + u, u >= 0,
  // basis_j . w = 0 for all j.
  {
    std::vector<RatVec> A(m, RatVec(dim, Rat(0)));
    RatVec b(m, Rat(0)), c(dim, Rat(0));
    for (int j = 0; j < m; ++j) {
      Int rhs = 0;
      for (int i = 0; i < dim; ++i) {
        A[j][i] = Rat(basis[j][i]);
        rhs += basis[j][i];
      }
      b[j] = Rat(-rhs);
    }
    SimplexResult r = simplex_min(A, b, c);
    if (r.status == SimplexResult::OPTIMAL) {
      out.certificate.assign(dim, Rat(1));
      for (int i = 0; i < dim; ++i) out.certificate[i] += r.x[i];
      for (int j = 0; j < m; ++j) {
        Rat dot(0);
        for (int i = 0; i < dim; ++i) dot += out.certificate[i] * Rat(basis[j][i]);
        if (dot != Rat(0)) throw std::logic_error("sign alternative: bad certificate");
      }
      return out;
    }
  }

  // Otherwise find the one-signed element: maximize 1.s with
  // s = sum_j y_j basis_j, 0 <= s <= 1.
  // Variables: y+ (m), y- (m), s (dim), t (dim).
  const int nv = 2 * m + 2 * dim;
  std::vector<RatVec> A(2 * dim, RatVec(nv, Rat(0)));
  RatVec b(2 * dim, Rat(0)), c(nv, Rat(0));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < m; ++j) {
      A[i][j] = Rat(basis[j][i]);
      A[i][m + j] = Rat(-basis[j][i]);
    }
    A[i][2 * m + i] = Rat(-1);
    A[dim + i][2 * m + i] = Rat(1);
    A[dim + i][2 * m + dim + i] = Rat(1);
    b[dim + i] = Rat(1);
    c[2 * m + i] = Rat(-1);
  }
  SimplexResult r = simplex_min(A, b, c);
  if (r.status != SimplexResult::OPTIMAL || r.objective >= Rat(0))
    throw std::logic_error("sign alternative: both branches failed");

  // scale y to integers
  Int denom = 1;
  for (int j = 0; j < 2 * m; ++j)
    denom = boost::multiprecision::lcm(denom, r.x[j].denominator());
  ZVec y(m);
  for (int j = 0; j < m; ++j) {
    Rat v = (r.x[j] - r.x[m + j]) * Rat(denom);
    assert(v.denominator() == 1);
    y[j] = v.numerator();
  }
  out.one_signed.assign(dim, Int(0));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < dim; ++i) out.one_signed[i] += y[j] * basis[j][i];
  bool nonzero = false;
  for (const Int& v : out.one_signed) {
    if (v < 0) throw std::logic_error("sign alternative: witness not one-signed");
    if (v != 0) nonzero = true;
  }
  if (!nonzero) throw std::logic_error("sign alternative: witness is zero");
  out.has_one_signed = true;
  return out;
}

} // namespace sd
