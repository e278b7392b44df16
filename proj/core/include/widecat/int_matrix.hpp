#pragma once

#include <optional>
#include <vector>

#include "widecat/numeric.hpp"

namespace widecat {

// Dense integer matrix with exact (GMP) entries, row-major storage.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  static IntMatrix identity(int n);

  bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix mat_hcat(const IntMatrix& x, const IntMatrix& y);
IntMatrix mat_vcat(const IntMatrix& x, const IntMatrix& y);

// Smith decomposition d = u * a * v with u, v unimodular, the diagonal of d
// nonnegative and satisfying d[0][0] | d[1][1] | ... ; off-diagonal zero.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  // Diagonal entries d[i][i] for i < min(rows, cols).
  std::vector<Int> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Exact determinant via fraction-free (Bareiss) elimination; square only.
Int determinant(const IntMatrix& a);

// One solution x of a*x = b over the integers, or nullopt when none exists.
std::optional<std::vector<Int>> solve_linear_z(const IntMatrix& a,
                                               const std::vector<Int>& b);

// Columns form a lattice basis of { x : a*x = 0 } in Z^cols.
IntMatrix kernel_basis_z(const IntMatrix& a);

// Prime factorization n = prod p^e as sorted (p, e) pairs; n >= 1.
std::vector<std::pair<Int, int>> factor_int(const Int& n);

}  // namespace widecat
