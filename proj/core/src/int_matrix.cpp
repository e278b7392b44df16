#include "widecat/int_matrix.hpp"

#include <algorithm>
#include <cassert>

#include "widecat/errors.hpp"

namespace widecat {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows)
    throw DomainError("dimension-mismatch", "matrix product shape mismatch");
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

IntMatrix mat_hcat(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows)
    throw DomainError("dimension-mismatch", "hcat row mismatch");
  IntMatrix z(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
  }
  return z;
}

IntMatrix mat_vcat(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.cols)
    throw DomainError("dimension-mismatch", "vcat column mismatch");
  IntMatrix z(x.rows + y.rows, x.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(x.rows + i, j) = y.at(i, j);
  return z;
}

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> out;
  int n = std::min(d.rows, d.cols);
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

namespace {

struct SnfWork {
  IntMatrix d, u, v;

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < d.cols; ++j) std::swap(d.at(r1, j), d.at(r2, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(r1, j), u.at(r2, j));
  }
  void swap_cols(int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, c1), d.at(i, c2));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, c1), v.at(i, c2));
  }
  // row r1 += q * row r2
  void add_row(int r1, int r2, const Int& q) {
    for (int j = 0; j < d.cols; ++j) d.at(r1, j) += q * d.at(r2, j);
    for (int j = 0; j < u.cols; ++j) u.at(r1, j) += q * u.at(r2, j);
  }
  // col c1 += q * col c2
  void add_col(int c1, int c2, const Int& q) {
    for (int i = 0; i < d.rows; ++i) d.at(i, c1) += q * d.at(i, c2);
    for (int i = 0; i < v.rows; ++i) v.at(i, c1) += q * v.at(i, c2);
  }
  void negate_row(int r) {
    for (int j = 0; j < d.cols; ++j) d.at(r, j) = -d.at(r, j);
    for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SnfWork w{a, IntMatrix::identity(a.rows), IntMatrix::identity(a.cols)};
  int n = std::min(a.rows, a.cols);

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing submatrix,
      // ties broken by (row, col) so the reduction is deterministic.
      int pi = -1, pj = -1;
      Int best;
      for (int i = t; i < w.d.rows; ++i)
        for (int j = t; j < w.d.cols; ++j) {
          if (w.d.at(i, j) == 0) continue;
          Int ax = abs(w.d.at(i, j));
          if (pi < 0 || ax < best) {
            pi = i;
            pj = j;
            best = ax;
          }
        }
      if (pi < 0) {
        // Trailing submatrix is zero; the decomposition is complete.
        for (int i = t; i < n; ++i)
          assert(w.d.at(i, i) == 0);
        t = n;  // caller loop ends
        break;
      }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < w.d.rows; ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / w.d.at(t, t);  // truncated division
        if (q != 0) w.add_row(i, t, -q);
        if (w.d.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < w.d.cols; ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        if (q != 0) w.add_col(j, t, -q);
        if (w.d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: if the pivot misses an entry of
      // the trailing block, fold that row in and re-reduce.
      bool divides_all = true;
      for (int i = t + 1; i < w.d.rows && divides_all; ++i)
        for (int j = t + 1; j < w.d.cols; ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.add_row(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (t >= n) break;
    if (w.d.at(t, t) < 0) w.negate_row(t);
  }
  // Sign-normalize any trailing pivots the early exit skipped.
  for (int t = 0; t < n; ++t)
    if (w.d.at(t, t) < 0) w.negate_row(t);
  return SmithDecomposition{w.u, w.d, w.v};
}

Int determinant(const IntMatrix& a) {
  if (a.rows != a.cols)
    throw DomainError("dimension-mismatch", "determinant of non-square matrix");
  int n = a.rows;
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          r = i;
          break;
        }
      if (r < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m.at(i, j) = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        Int q;
        mpz_divexact(q.get_mpz_t(), m.at(i, j).get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = q;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::optional<std::vector<Int>> solve_linear_z(const IntMatrix& a,
                                               const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw DomainError("dimension-mismatch", "solve: rhs length != rows");
  SmithDecomposition s = smith_normal_form(a);
  // a x = b  <=>  d y = u b with x = v y.
  std::vector<Int> ub(a.rows, 0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.rows; ++j) ub[i] += s.u.at(i, j) * b[j];
  std::vector<Int> y(a.cols, 0);
  int n = std::min(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) {
    const Int d = i < n ? s.d.at(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  std::vector<Int> x(a.cols, 0);
  for (int i = 0; i < a.cols; ++i)
    for (int j = 0; j < a.cols; ++j) x[i] += s.v.at(i, j) * y[j];
  return x;
}

IntMatrix kernel_basis_z(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  int n = std::min(a.rows, a.cols);
  std::vector<int> free_cols;
  for (int j = 0; j < a.cols; ++j)
    if (j >= n || s.d.at(j, j) == 0) free_cols.push_back(j);
  IntMatrix k(a.cols, static_cast<int>(free_cols.size()));
  for (int out = 0; out < k.cols; ++out)
    for (int i = 0; i < a.cols; ++i) k.at(i, out) = s.v.at(i, free_cols[out]);
  return k;
}

std::vector<std::pair<Int, int>> factor_int(const Int& n) {
  assert(n >= 1);
  std::vector<std::pair<Int, int>> out;
  Int m = n;
  auto strip = [&](const Int& p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  Int p = 3;
  while (p * p <= m) {
    if (mpz_probab_prime_p(m.get_mpz_t(), 40) != 0) break;
    strip(p);
    p += 2;
  }
  if (m > 1) out.emplace_back(m, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace widecat
