#include "zmatrix.hpp"

#include <cassert>
#include <stdexcept>

namespace sd {

ZMatrix ZMatrix::identity(int n) {
  ZMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_rows(const std::vector<ZVec>& rows_in, int ncols) {
  ZMatrix m(static_cast<int>(rows_in.size()), ncols);
  for (int r = 0; r < m.rows; ++r) {
    assert(static_cast<int>(rows_in[r].size()) == ncols);
    for (int c = 0; c < ncols; ++c) m.at(r, c) = rows_in[r][c];
  }
  return m;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
  assert(cols == o.rows);
  ZMatrix out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

ZVec ZMatrix::mul_vec(const ZVec& v) const {
  assert(static_cast<int>(v.size()) == cols);
  ZVec out(rows);
  for (int i = 0; i < rows; ++i) {
    Int acc = 0;
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ZMatrix ZMatrix::transposed() const {
  ZMatrix out(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
  return out;
}

namespace {

void swap_rows(ZMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(ZMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row i += f * row j
void add_row(ZMatrix& m, int i, int j, const Int& f) {
  if (f == 0) return;
  for (int c = 0; c < m.cols; ++c) m.at(i, c) += f * m.at(j, c);
}
// col i += f * col j
void add_col(ZMatrix& m, int i, int j, const Int& f) {
  if (f == 0) return;
  for (int r = 0; r < m.rows; ++r) m.at(r, i) += f * m.at(r, j);
}
void negate_row(ZMatrix& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor division, exact semantics for reduction steps
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

} // namespace

namespace {

// g = gcd(a, b) > 0 with s*a + t*b = g
Int extgcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * ss; old_s = ss; ss = tmp;
    tmp = old_t - q * tt; old_t = tt; tt = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  s = old_s; t = old_t;
  return old_r;
}

// rows i1 <- s*i1 + t*i2, i2 <- u*i1 + v*i2 with sv - tu = +-1
void combine_rows(ZMatrix& m, int i1, int i2, const Int& s, const Int& t,
                  const Int& u, const Int& v) {
  for (int c = 0; c < m.cols; ++c) {
    Int x = m.at(i1, c), y = m.at(i2, c);
    m.at(i1, c) = s * x + t * y;
    m.at(i2, c) = u * x + v * y;
  }
}
void combine_cols(ZMatrix& m, int j1, int j2, const Int& s, const Int& t,
                  const Int& u, const Int& v) {
  for (int r = 0; r < m.rows; ++r) {
    Int x = m.at(r, j1), y = m.at(r, j2);
    m.at(r, j1) = s * x + t * y;
    m.at(r, j2) = u * x + v * y;
  }
}

} // namespace

SmithForm smith_normal_form(const ZMatrix& A) {
  SmithForm s;
  s.D = A;
  s.U = ZMatrix::identity(A.rows);
  s.V = ZMatrix::identity(A.cols);
  ZMatrix& D = s.D;
  const int nmin = std::min(A.rows, A.cols);

  for (int t = 0; t < nmin; ++t) {
    // find a pivot: smallest nonzero |entry| in D[t.., t..]
    int pr = -1, pc = -1;
    Int best = 0;
    for (int i = t; i < D.rows; ++i)
      for (int j = t; j < D.cols; ++j)
        if (D.at(i, j) != 0) {
          Int v = abs_int(D.at(i, j));
          if (pr < 0 || v < best) { best = v; pr = i; pc = j; }
        }
    if (pr < 0) break; // all zero, done

    swap_rows(D, t, pr); swap_rows(s.U, t, pr);
    swap_cols(D, t, pc); swap_cols(s.V, t, pc);

    // clear column t and row t with gcd combinations until both stay clear
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < D.rows; ++i) {
        const Int a = D.at(t, t), b = D.at(i, t);
        if (b == 0) continue;
        if (b % a == 0) {
          Int q = b / a;
          add_row(D, i, t, -q); add_row(s.U, i, t, -q);
        } else {
          Int sg, tg, g = extgcd(a, b, sg, tg);
          combine_rows(D, t, i, sg, tg, -b / g, a / g);
          combine_rows(s.U, t, i, sg, tg, -b / g, a / g);
          clean = false;
        }
      }
      for (int j = t + 1; j < D.cols; ++j) {
        const Int a = D.at(t, t), b = D.at(t, j);
        if (b == 0) continue;
        if (b % a == 0) {
          Int q = b / a;
          add_col(D, j, t, -q); add_col(s.V, j, t, -q);
        } else {
          Int sg, tg, g = extgcd(a, b, sg, tg);
          combine_cols(D, t, j, sg, tg, -b / g, a / g);
          combine_cols(s.V, t, j, sg, tg, -b / g, a / g);
          clean = false;
        }
      }
    }

    if (D.at(t, t) < 0) { negate_row(D, t); negate_row(s.U, t); }

    // divisibility: fold any bad entry into row t and redo this step
    bool redo = false;
    for (int i = t + 1; i < D.rows && !redo; ++i)
      for (int j = t + 1; j < D.cols && !redo; ++j)
        if (D.at(i, j) % D.at(t, t) != 0) {
          add_row(D, t, i, 1); add_row(s.U, t, i, 1);
          redo = true;
        }
    if (redo) { --t; continue; }
  }

  s.rank = 0;
  for (int t = 0; t < nmin; ++t)
    if (D.at(t, t) != 0) ++s.rank;
  return s;
}

Int determinant(const ZMatrix& A) {
  if (A.rows != A.cols) throw std::invalid_argument("determinant: matrix not square");
  const int n = A.rows;
  if (n == 0) return 1;
  ZMatrix m = A;
  Int prev = 1;
  int sign = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (m.at(t, t) == 0) {
      int p = -1;
      for (int i = t + 1; i < n; ++i)
        if (m.at(i, t) != 0) { p = i; break; }
      if (p < 0) return 0;
      swap_rows(m, t, p);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i) {
      for (int j = t + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(t, t) - m.at(i, t) * m.at(t, j)) / prev;
      m.at(i, t) = 0;
    }
    prev = m.at(t, t);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::vector<ZVec> kernel_basis(const ZMatrix& A) {
  SmithForm s = smith_normal_form(A);
  std::vector<ZVec> out;
  for (int j = s.rank; j < A.cols; ++j) {
    ZVec v(A.cols);
    for (int i = 0; i < A.cols; ++i) v[i] = s.V.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

LinearSolution solve_presolved(const SmithForm& s, int rows, int cols, const ZVec& b) {
  assert(static_cast<int>(b.size()) == rows);
  LinearSolution sol;
  ZVec ub = s.U.mul_vec(b);
  ZVec w(cols);
  for (int i = 0; i < rows; ++i) {
    Int d = (i < std::min(rows, cols)) ? s.D.at(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return sol; // unsolvable
    } else {
      if (ub[i] % d != 0) return sol;
      if (i < cols) w[i] = ub[i] / d;
    }
  }
  sol.solvable = true;
  sol.particular = s.V.mul_vec(w);
  for (int j = s.rank; j < cols; ++j) {
    ZVec v(cols);
    for (int i = 0; i < cols; ++i) v[i] = s.V.at(i, j);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

LinearSolution solve_integer(const ZMatrix& A, const ZVec& b) {
  return solve_presolved(smith_normal_form(A), A.rows, A.cols, b);
}

bool HermiteLattice::contains(const ZVec& v) const {
  ZVec r = reduce(v);
  for (const Int& x : r)
    if (x != 0) return false;
  return true;
}

ZVec HermiteLattice::reduce(const ZVec& v) const {
  assert(static_cast<int>(v.size()) == dim);
  ZVec r = v;
  for (size_t i = 0; i < rows.size(); ++i) {
    int p = pivot_col[i];
    if (r[p] == 0) continue;
    Int q = fdiv(r[p], rows[i][p]);
    if (q == 0) continue;
    for (int c = 0; c < dim; ++c) r[c] -= q * rows[i][c];
  }
  return r;
}

HermiteLattice hermite_lattice(const std::vector<ZVec>& generators, int dim) {
  HermiteLattice h;
  h.dim = dim;
  std::vector<ZVec> work = generators;
  int row = 0;
  for (int col = 0; col < dim && row < static_cast<int>(work.size()); ++col) {
    // reduce all rows >= row on this column to a single nonzero via gcd steps
    while (true) {
      int p = -1;
      Int best = 0;
      for (int i = row; i < static_cast<int>(work.size()); ++i)
        if (work[i][col] != 0) {
          Int v = abs_int(work[i][col]);
          if (p < 0 || v < best) { best = v; p = i; }
        }
      if (p < 0) break;
      std::swap(work[row], work[p]);
      bool others = false;
      for (int i = row + 1; i < static_cast<int>(work.size()); ++i) {
        if (work[i][col] == 0) continue;
        Int q = fdiv(work[i][col], work[row][col]);
        for (int c = 0; c < dim; ++c) work[i][c] -= q * work[row][c];
        if (work[i][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (work[row][col] != 0) {
      if (work[row][col] < 0)
        for (int c = 0; c < dim; ++c) work[row][c] = -work[row][c];
      row++;
    }
  }
  work.resize(row);
  // reduce entries above pivots
  for (int i = row - 1; i >= 0; --i) {
    int p = -1;
    for (int c = 0; c < dim; ++c)
      if (work[i][c] != 0) { p = c; break; }
    h.pivot_col.insert(h.pivot_col.begin(), p);
    for (int j = 0; j < i; ++j) {
      if (work[j][p] == 0) continue;
      Int q = fdiv(work[j][p], work[i][p]);
      for (int c = 0; c < dim; ++c) work[j][c] -= q * work[i][c];
    }
  }
  h.rows = std::move(work);
  return h;
}

} // namespace sd
