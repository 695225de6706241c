#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "wmha/algebra.hpp"
#include "wmha/groupoid.hpp"
#include "wmha/linalg.hpp"
#include "wmha/rational.hpp"

using namespace wmha;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = Rational(d(rng), 1 + (d(rng) & 1));
      m(i, j).canonicalize();
    }
  return m;
}

oracle::Mat to_rows(const Matrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST_SUITE("exact-algebra") {
  TEST_CASE("rationals parse and print canonically") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(Rational(-6) / 4) == "-3/2");
    CHECK(to_string(Rational(4) / 2) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  }

  TEST_CASE("one-dimensional algebra is the field") {
    FiniteAlgebra k = make_algebra({"1"}, {{Vector{1}}});
    CHECK(k.dim() == 1);
    REQUIRE(k.unit().has_value());
    CHECK(*k.unit() == Vector{1});
  }

  TEST_CASE("matrix units multiply as e_ij e_kl = delta_jk e_il") {
    FiniteAlgebra m = matrix_algebra(2);
    CHECK(m.dim() == 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          for (std::size_t l = 0; l < 2; ++l) {
            Vector got = m.mul(m.basis_vector(i * 2 + j), m.basis_vector(k * 2 + l));
            Vector want = j == k ? unit_vector(4, i * 2 + l) : zero_vector(4);
            CHECK(got == want);
          }
    // Revalidation through the checked constructor accepts it.
    CHECK_NOTHROW(make_algebra(m.labels(), m.structure_constants()));
  }

  TEST_CASE("zero product is rejected as degenerate") {
    StructureConstants c(2, std::vector<Vector>(2, zero_vector(2)));
    try {
      make_algebra({"a", "b"}, c);
      FAIL("zero product accepted");
    } catch (const AlgebraError& e) {
      CHECK(e.kind() == AlgebraErrorKind::DegenerateProduct);
    }
  }

  TEST_CASE("non-associative table is rejected with a witness triple") {
    // e0 unit-like on the left only, e1 e1 = e0: (e1 e1) e1 = e1 but e1 (e1 e1) = 0.
    StructureConstants c(2, std::vector<Vector>(2, zero_vector(2)));
    c[0][0] = Vector{1, 0};
    c[0][1] = Vector{0, 1};
    c[1][1] = Vector{1, 0};
    try {
      make_algebra({"a", "b"}, c);
      FAIL("non-associative product accepted");
    } catch (const AlgebraError& e) {
      CHECK(e.kind() == AlgebraErrorKind::NonAssociative);
      CHECK(e.witness().size() == 3);
    }
  }

  TEST_CASE("tensor products") {
    FiniteAlgebra m2 = matrix_algebra(2);
    CHECK(tensor_algebra(scalar_algebra(), m2) == m2);
    CHECK(tensor_algebra(m2, m2).dim() == 16);
    // K(P2) (x) K(P2) is the function algebra on the 16 arrow pairs.
    FiniteAlgebra k = groupoid_algebra(pair_groupoid(2));
    CHECK(tensor_algebra(k, k) == function_algebra(16));
  }

  TEST_CASE("opposite algebras") {
    FiniteAlgebra f = function_algebra(3);
    CHECK(opposite_algebra(f) == f);
    FiniteAlgebra m2 = matrix_algebra(2);
    FiniteAlgebra op = opposite_algebra(m2);
    CHECK_FALSE(op == m2);
    CHECK(opposite_algebra(op) == m2);
    Matrix transpose(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) transpose(j * 2 + i, i * 2 + j) = 1;
    CHECK(is_homomorphism(m2, op, transpose));
    CHECK_FALSE(is_homomorphism(m2, op, Matrix::identity(4)));
    CHECK(is_anti_homomorphism(m2, m2, transpose));
  }

  TEST_CASE("multiplier algebras of unital algebras") {
    FiniteAlgebra m23 = direct_sum(matrix_algebra(2), matrix_algebra(3));
    MultiplierAlgebra ma = multiplier_algebra(m23);
    CHECK(ma.basis.size() == 13);
    CHECK(ma.embedding_surjective);
    MultiplierAlgebra mk = multiplier_algebra(groupoid_algebra(pair_groupoid(2)));
    CHECK(mk.basis.size() == 4);
    CHECK(mk.embedding_surjective);
    // Every basis multiplier satisfies the compatibility constraint.
    for (const Multiplier& m : ma.basis) CHECK_FALSE(check_multiplier(m23, m).has_value());
  }

  TEST_CASE("local units are the unit") {
    auto u = has_local_units(matrix_algebra(2));
    REQUIRE(u.has_value());
    CHECK(*u == Vector{1, 0, 0, 1});
    auto v = has_local_units(groupoid_algebra(pair_groupoid(2)));
    REQUIRE(v.has_value());
    CHECK(*v == Vector{1, 1, 1, 1});
  }

  TEST_CASE("subspaces: kernel, image, quotient") {
    CHECK(kernel(Matrix(2, 2)).dim() == 2);
    Matrix p(2, 2);
    p(0, 0) = 1;
    p(0, 1) = 1;  // rank-one idempotent
    CHECK(p * p == p);
    CHECK(intersect(image(p), kernel(p)).dim() == 0);
    CHECK(sum(image(p), kernel(p)).dim() == 2);
    Subspace s = Subspace::span(4, {Vector{1, 2, 0, 0}, Vector{0, 0, 1, 1}, Vector{1, 2, 1, 1}});
    CHECK(s.dim() == 2);
    CHECK(quotient_dim(s) == 2);
  }

  TEST_CASE("equal subspaces have identical echelon bases") {
    Subspace a = Subspace::span(3, {Vector{1, 1, 0}, Vector{0, 1, 1}});
    Subspace b = Subspace::span(3, {Vector{1, 2, 1}, Vector{2, 1, -1}});
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
  }

  TEST_CASE("rank agrees with the reference elimination on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + trial % 6, c = 1 + (trial * 7) % 6;
      Matrix m = random_matrix(rng, r, c, -2, 2);
      if (trial % 3 == 0 && r > 1)  // force a dependent row
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3;
      std::size_t rk = rank(m);
      CHECK(rk == oracle::rank(to_rows(m)));
      CHECK(kernel(m).dim() + rk == c);
      CHECK(image(m).dim() == rk);
    }
  }

  TEST_CASE("inverse and solve are exact") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m = random_matrix(rng, 4, 4, -3, 3);
      auto inv = inverse(m);
      if (rank(m) < 4) {
        CHECK_FALSE(inv.has_value());
        continue;
      }
      REQUIRE(inv.has_value());
      CHECK(m * *inv == Matrix::identity(4));
      Vector b{1, Rational(-1, 3), 2, 0};
      auto sol = solve(m, b);
      REQUIRE(sol.has_value());
      CHECK(m.apply(sol->particular) == b);
      CHECK(sol->kernel_basis.empty());
    }
    Matrix z(1, 2);
    z(0, 0) = 1;
    z(0, 1) = 1;
    CHECK_FALSE(solve(Matrix(1, 1), Vector{1}).has_value());
    auto s = solve(z, Vector{2});
    REQUIRE(s.has_value());
    CHECK(s->kernel_basis.size() == 1);
  }

  TEST_CASE("echelon remainders are canonical representatives") {
    Echelon e(3);
    CHECK(e.insert(Vector{1, 1, 0}));
    CHECK_FALSE(e.insert(Vector{2, 2, 0}));
    Vector a{3, 0, 1}, b{0, -3, 1};
    CHECK(e.reduce(a) == e.reduce(b));  // a - b = 3(1,1,0)
    CHECK(e.contains(Vector{-1, -1, 0}));
  }

  TEST_CASE("dimension mismatches throw") {
    Vector a{1, 2}, b{1};
    CHECK_THROWS_AS(a + b, DimensionMismatch);
  }
}
