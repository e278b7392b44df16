// Exact coefficient arithmetic and integer matrix algebra: rationals,
// prime-field residues, Smith normal form, determinants, linear solving,
// and integer kernels.  Expected decompositions were computed with an
// independent computer algebra system and frozen here.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include <widecat/errors.hpp>
#include <widecat/int_matrix.hpp>
#include <widecat/numeric.hpp>

using namespace widecat;

namespace {

IntMatrix mat(int r, int c, const std::vector<long>& entries) {
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) m.at(i, j) = entries[i * c + j];
  }
  return m;
}

bool is_zero_matrix(const IntMatrix& m) {
  for (const Int& v : m.a) {
    if (v != 0) return false;
  }
  return true;
}

// |det| = 1, via exact Bareiss determinant.
bool is_unimodular(const IntMatrix& m) {
  Int d = determinant(m);
  return d == 1 || d == -1;
}

IntMatrix random_matrix(std::mt19937& rng, int r, int c, long span) {
  IntMatrix m(r, c);
  for (Int& v : m.a) {
    v = static_cast<long>(rng() % (2 * span + 1)) - span;
  }
  return m;
}

}  // namespace

TEST_CASE("rational coefficients stay in lowest terms") {
  Coeff a = Coeff::rational(Rat(2, 4));
  CHECK(a.rat() == Rat(1, 2));
  Coeff b = Coeff::rational(Rat(-6, 9));
  CHECK(b.rat() == Rat(-2, 3));
  CHECK((a + b).rat() == Rat(-1, 6));
  CHECK((a * b).rat() == Rat(-1, 3));
  CHECK((a / b).rat() == Rat(-3, 4));
  CHECK((-a).rat() == Rat(-1, 2));
  CHECK(a.inverse().rat() == Rat(2));
  CHECK(Coeff::zero(0).is_zero());
  CHECK(Coeff::one(0).is_one());
}

TEST_CASE("prime-field residues stay in [0, p)") {
  Coeff a = Coeff::of_int(Int(9), 7);
  CHECK(a.residue_value() == 2);
  Coeff b = Coeff::of_int(Int(-1), 7);
  CHECK(b.residue_value() == 6);
  CHECK((a + b).residue_value() == 1);
  CHECK((a * b).residue_value() == 5);
  // 2 * 4 = 8 = 1 mod 7.
  CHECK(a.inverse().residue_value() == 4);
  CHECK((a / a).is_one());
}

TEST_CASE("primality test covers the admissible characteristics") {
  CHECK(is_prime_i64(2));
  CHECK(is_prime_i64(7));
  CHECK(is_prime_i64(2147483647));  // 2^31 - 1
  CHECK_FALSE(is_prime_i64(1));
  CHECK_FALSE(is_prime_i64(91));  // 7 * 13
}

TEST_CASE("matrix product and concatenation shapes") {
  IntMatrix a = mat(2, 3, {1, 2, 3, 4, 5, 6});
  IntMatrix b = mat(3, 2, {7, 8, 9, 10, 11, 12});
  IntMatrix p = mat_mul(a, b);
  CHECK(p == mat(2, 2, {58, 64, 139, 154}));
  CHECK(mat_hcat(a, a).cols == 6);
  CHECK(mat_vcat(b, b).rows == 6);
  CHECK_THROWS_AS(mat_mul(a, a), DomainError);
}

TEST_CASE("smith normal form of frozen examples") {
  SUBCASE("full-rank 3x3") {
    IntMatrix a = mat(3, 3, {2, 4, 4, -6, 6, 12, 10, 4, 16});
    SmithDecomposition s = smith_normal_form(a);
    CHECK(s.diagonal() == std::vector<Int>{2, 2, 156});
    CHECK(s.d == mat_mul(mat_mul(s.u, a), s.v));
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
  }
  SUBCASE("rank-deficient 3x3") {
    IntMatrix a = mat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(smith_normal_form(a).diagonal() == std::vector<Int>{1, 3, 0});
  }
  SUBCASE("2x2 with divisibility correction") {
    IntMatrix a = mat(2, 2, {6, 4, 2, 8});
    CHECK(smith_normal_form(a).diagonal() == std::vector<Int>{2, 20});
    CHECK(determinant(a) == 40);
  }
  SUBCASE("single entry reduces to its absolute value") {
    CHECK(smith_normal_form(mat(1, 1, {-2})).diagonal() ==
          std::vector<Int>{2});
  }
}

TEST_CASE("smith normal form of degenerate shapes") {
  IntMatrix none(0, 3);
  SmithDecomposition s = smith_normal_form(none);
  CHECK(s.diagonal().empty());
  CHECK(s.v.rows == 3);
  IntMatrix tall(3, 0);
  CHECK(smith_normal_form(tall).u.rows == 3);
  CHECK(smith_normal_form(IntMatrix()).diagonal().empty());
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(20260817);
  for (int trial = 0; trial < 500; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5);
    int c = 1 + static_cast<int>(rng() % 5);
    IntMatrix a = random_matrix(rng, r, c, 9);
    SmithDecomposition s = smith_normal_form(a);

    CHECK(s.d == mat_mul(mat_mul(s.u, a), s.v));
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));

    std::vector<Int> diag = s.diagonal();
    for (size_t i = 0; i < diag.size(); ++i) {
      CHECK(diag[i] >= 0);
      if (i + 1 < diag.size() && diag[i] != 0) {
        CHECK(diag[i + 1] % diag[i] == 0);
      }
      if (diag[i] == 0 && i + 1 < diag.size()) {
        CHECK(diag[i + 1] == 0);
      }
    }
    // Off-diagonal entries vanish.
    for (int i = 0; i < s.d.rows; ++i) {
      for (int j = 0; j < s.d.cols; ++j) {
        if (i != j) CHECK(s.d.at(i, j) == 0);
      }
    }
  }
}

TEST_CASE("determinant via fraction-free elimination") {
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(determinant(mat(2, 2, {1, 2, 3, 4})) == -2);
  CHECK(determinant(mat(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1})) == 5);
  CHECK(determinant(IntMatrix()) == 1);  // empty product
  CHECK_THROWS_AS(determinant(mat(1, 2, {1, 2})), DomainError);
}

TEST_CASE("determinant is multiplicative on random pairs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    IntMatrix a = random_matrix(rng, n, n, 6);
    IntMatrix b = random_matrix(rng, n, n, 6);
    CHECK(determinant(mat_mul(a, b)) == determinant(a) * determinant(b));
  }
}

TEST_CASE("integer linear solve") {
  SUBCASE("solvable square system") {
    // 2a + 4b = 8, 3a + 5b = 11 has the integer solution (2, 1).
    IntMatrix a = mat(2, 2, {2, 4, 3, 5});
    auto x = solve_linear_z(a, {Int(8), Int(11)});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<Int>{2, 1});
  }
  SUBCASE("no rational solution") {
    IntMatrix a = mat(2, 1, {1, 1});
    CHECK_FALSE(solve_linear_z(a, {Int(0), Int(1)}).has_value());
  }
  SUBCASE("rational but not integral solution") {
    IntMatrix a = mat(1, 1, {2});
    CHECK_FALSE(solve_linear_z(a, {Int(1)}).has_value());
    CHECK(solve_linear_z(a, {Int(6)}).value() == std::vector<Int>{3});
  }
  SUBCASE("trivial single-row example") {
    // The subsystem 2x = 4 has solution [2].
    auto x = solve_linear_z(mat(1, 1, {2}), {Int(4)});
    CHECK(x.value() == std::vector<Int>{2});
  }
}

TEST_CASE("random consistent systems are solved exactly") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    IntMatrix a = random_matrix(rng, r, c, 8);
    std::vector<Int> seed(c);
    for (Int& v : seed) v = static_cast<long>(rng() % 11) - 5;
    // b = a * seed is consistent by construction.
    std::vector<Int> b(r, Int(0));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) b[i] += a.at(i, j) * seed[j];
    }
    auto x = solve_linear_z(a, b);
    REQUIRE(x.has_value());
    for (int i = 0; i < r; ++i) {
      Int acc = 0;
      for (int j = 0; j < c; ++j) acc += a.at(i, j) * (*x)[j];
      CHECK(acc == b[i]);
    }
  }
}

TEST_CASE("integer kernels annihilate and have the right rank") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    IntMatrix a = random_matrix(rng, r, c, 8);
    IntMatrix k = kernel_basis_z(a);
    CHECK(is_zero_matrix(mat_mul(a, k)));

    // rank(a) + dim ker = c, with rank read off the Smith diagonal.
    int rank = 0;
    for (const Int& d : smith_normal_form(a).diagonal()) {
      if (d != 0) ++rank;
    }
    CHECK(k.cols == c - rank);
  }
}

TEST_CASE("kernel basis spans: random kernel vectors are combinations") {
  // Every solution of a*x = 0 must be an integer combination of the
  // basis columns; check by solving against the basis.
  IntMatrix a = mat(1, 3, {2, 4, 4});
  IntMatrix k = kernel_basis_z(a);
  CHECK(k.cols == 2);
  CHECK(is_zero_matrix(mat_mul(a, k)));
  CHECK(solve_linear_z(k, {Int(2), Int(-1), Int(0)}).has_value());
  CHECK(solve_linear_z(k, {Int(0), Int(1), Int(-1)}).has_value());
  CHECK(solve_linear_z(k, {Int(-2), Int(0), Int(1)}).has_value());
}

TEST_CASE("prime factorization") {
  using Factors = std::vector<std::pair<Int, int>>;
  CHECK(factor_int(Int(1)) == Factors{});
  CHECK(factor_int(Int(2)) == Factors{{2, 1}});
  CHECK(factor_int(Int(360)) == Factors{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factor_int(Int(97)) == Factors{{97, 1}});
  Factors f = factor_int(Int(1) << 40);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == std::pair<Int, int>{2, 40});
}
