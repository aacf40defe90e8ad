#include <gtest/gtest.h>

#include <random>

#include "jjalg/matrix.hpp"
#include "support.hpp"

using namespace jjalg;

TEST(Field, ParsesDescriptors) {
  EXPECT_TRUE(Field::parse("q").is_rational());
  EXPECT_TRUE(Field::parse("0").is_rational());
  EXPECT_EQ(Field::parse("fp:7").characteristic(), 7u);
  EXPECT_EQ(Field::parse("11").characteristic(), 11u);
  EXPECT_THROW(Field::parse("fp:3"), std::domain_error);
  EXPECT_THROW(Field::parse("fp:2"), std::domain_error);
  EXPECT_THROW(Field::parse("fp:9"), std::domain_error);
  EXPECT_ANY_THROW(Field::parse("banana"));
}

TEST(Field, PrimeArithmetic) {
  Field f = Field::prime(5);
  EXPECT_EQ(f.from(Scalar(-1)), 4);
  EXPECT_EQ(f.from(Scalar(1, 2)), 3); // 2 * 3 = 6 = 1
  EXPECT_EQ(f.inv(Scalar(2)), 3);
  EXPECT_EQ(f.div(Scalar(1), Scalar(3)), 2);
  EXPECT_THROW(f.from(Scalar(1, 5)), std::domain_error);
  EXPECT_TRUE(f.supports_degree(4));
  EXPECT_FALSE(f.supports_degree(5));
}

TEST(Field, RationalParsing) {
  EXPECT_EQ(parse_rational("-3/6"), Scalar(-1, 2));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_ANY_THROW(parse_rational("1/0"));
  EXPECT_ANY_THROW(parse_rational("1/"));
  EXPECT_ANY_THROW(parse_rational("x"));
  EXPECT_EQ(format_scalar(Scalar(-1, 2)), "-1/2");
}

TEST(Matrix, RrefOfKnownMatrix) {
  auto m = Matrix::from_rows(Field::rationals(), {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  auto r = rref(m);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  auto expected = Matrix::from_rows(Field::rationals(), {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
  EXPECT_EQ(r.matrix, expected);
}

TEST(Matrix, DeterminantAndInverse) {
  auto m = Matrix::from_rows(Field::rationals(), {{2, 1}, {1, 1}});
  EXPECT_EQ(determinant(m), 1);
  EXPECT_EQ(inverse(m) * m, Matrix::identity(Field::rationals(), 2));
  auto singular = Matrix::from_rows(Field::rationals(), {{1, 2}, {2, 4}});
  EXPECT_EQ(determinant(singular), 0);
  EXPECT_THROW(inverse(singular), std::domain_error);
}

TEST(Matrix, InverseOverPrimeField) {
  Field f = Field::prime(7);
  auto m = Matrix::from_rows(f, {{3, 1}, {2, 5}});
  EXPECT_EQ(inverse(m) * m, Matrix::identity(f, 2));
}

TEST(Matrix, SolveLinear) {
  auto m = Matrix::from_rows(Field::rationals(), {{1, 1}, {1, -1}});
  auto x = solve_linear(m, Vector{3, 1});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Vector{2, 1}));
  auto inconsistent = Matrix::from_rows(Field::rationals(), {{1, 1}, {2, 2}});
  EXPECT_FALSE(solve_linear(inconsistent, Vector{1, 3}));
}

TEST(Matrix, RankNullityAndIdempotence) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 5), entry(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    Matrix m(Field::rationals(), r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = entry(rng) * (trial % 3 == 0 ? 0 : 1) + (i == j ? entry(rng) : 0);
    auto red = rref(m);
    EXPECT_EQ(red.rank + kernel(m).dim(), c);
    EXPECT_EQ(rref(red.matrix).matrix, red.matrix);
    for (const auto &v : kernel(m).basis_vectors())
      EXPECT_TRUE(is_zero(m.apply(v)));
  }
}

TEST(Matrix, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = support::random_invertible(rng, 4);
    auto b = support::random_invertible(rng, 4);
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}

TEST(Subspace, CanonicalForm) {
  Field q = Field::rationals();
  auto u = Subspace::span(q, 3, {{1, 1, 0}, {0, 1, 0}});
  auto v = Subspace::span(q, 3, {{1, 0, 0}, {2, 3, 0}, {0, 0, 0}});
  EXPECT_EQ(u, v);
  EXPECT_EQ(u.dim(), 2u);
  EXPECT_TRUE(u.contains(Vector{5, -1, 0}));
  EXPECT_FALSE(u.contains(Vector{0, 0, 1}));
  EXPECT_TRUE(Subspace::full(q, 3).contains(u));
  EXPECT_EQ(subspace_sum(u, Subspace::span(q, 3, {{0, 0, 1}})), Subspace::full(q, 3));
  EXPECT_EQ(Subspace::zero(q, 3).dim(), 0u);
}
