#include <gtest/gtest.h>

#include <random>

#include "jjalg/catalog.hpp"
#include "jjalg/identity.hpp"
#include "jjalg/structure.hpp"
#include "support.hpp"

using namespace jjalg;

namespace {

Vector e(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i - 1] = 1;
  return v;
}

Algebra idempotent_line() {
  Algebra::Builder b(Field::rationals(), 1);
  b.set(0, 0, {1});
  return b.build();
}

const Algebra &entry(const char *name) { return catalog::get(name).algebra; }

} // namespace

TEST(Product, BasisAndBilinearity) {
  EXPECT_TRUE(is_zero(entry("A_{0,1}").product(e(1, 1), e(1, 1))));
  EXPECT_EQ(entry("A_{1,2}").product(e(2, 1), e(2, 1)), e(2, 2));
  std::mt19937_64 rng(3);
  const Algebra &a = entry("A_{NA,5}");
  for (int t = 0; t < 20; ++t) {
    Vector u = support::random_vector(rng, 5), v = support::random_vector(rng, 5);
    Vector u2 = u;
    for (auto &x : u2)
      x *= 2;
    Vector lhs = a.product(u2, v), rhs = a.product(u, v);
    for (auto &x : rhs)
      x *= 2;
    EXPECT_EQ(lhs, rhs);
  }
  EXPECT_THROW(a.product(Vector(4), Vector(5)), std::invalid_argument);
}

TEST(Commutativity, DetectsWitness) {
  EXPECT_TRUE(is_commutative(entry("A_{1,3}")).commutative);
  EXPECT_TRUE(is_commutative(catalog::suttles()).commutative);
  Algebra::Builder b(Field::rationals(), 3);
  b.set(0, 1, {0, 0, 1}, false);
  auto r = is_commutative(b.build());
  EXPECT_FALSE(r.commutative);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST(Builder, RejectsConflictingDeclarations) {
  Algebra::Builder b(Field::rationals(), 2);
  b.set(0, 1, {0, 1});
  EXPECT_NO_THROW(b.set(1, 0, {0, 1}));
  EXPECT_THROW(b.set(1, 0, {1, 0}), std::invalid_argument);
}

TEST(Identities, Examples) {
  EXPECT_TRUE(check_identity(entry("A_{1,4}"), Identity::jacobi()).holds);
  EXPECT_TRUE(check_identity(entry("A_{1,2}"), Identity::nil(3)).holds);
  auto r = check_identity(idempotent_line(), Identity::nil(3));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ((*r.witness)[0], (std::vector<std::size_t>{0, 0, 0}));
}

TEST(Identities, CharacteristicTooSmall) {
  Algebra a = catalog::suttles(Field::prime(5));
  EXPECT_THROW(check_identity(a, Identity::nil(5)), std::domain_error);
  EXPECT_NO_THROW(check_identity(a, Identity::nil(4)));
}

TEST(Identities, JacobiShortcutAgreesWithMultilinearization) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    Algebra a = support::random_commutative(rng, 1 + t % 4);
    EXPECT_EQ(is_jacobi(a).holds, is_jacobi_direct(a).holds);
  }
}

TEST(Identities, JacobiEquivalentToCubeZeroForCommutative) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    Algebra a = support::random_commutative(rng, 1 + t % 4, 1, 0.2);
    EXPECT_EQ(is_jacobi(a).holds, check_identity(a, Identity::nil(3)).holds);
  }
}

TEST(Identities, PrimeFieldAgreesWithRationals) {
  // Integer tensors reduced mod 7: a true identity over Q stays true mod 7.
  for (const auto *e : catalog::list(std::nullopt, true)) {
    bool integral = true;
    for (const auto &c : e->algebra.constants())
      integral = integral && c.get_den() == 1;
    if (!integral)
      continue;
    Algebra reduced(Field::prime(7), e->dim(), [&] {
      std::vector<Scalar> c = e->algebra.constants();
      for (auto &x : c)
        x = Field::prime(7).from(x);
      return c;
    }());
    EXPECT_TRUE(is_jacobi(reduced).holds) << e->name;
    EXPECT_TRUE(is_jordan(reduced).holds) << e->name;
  }
}

TEST(Structure, CatalogTheorems) {
  for (const auto *e : catalog::list(std::nullopt, true)) {
    const Algebra &a = e->algebra;
    EXPECT_TRUE(is_commutative(a).commutative) << e->name;
    EXPECT_TRUE(is_jacobi(a).holds) << e->name;
    EXPECT_TRUE(is_jordan(a).holds) << e->name;
    EXPECT_TRUE(is_nilpotent(a).nilpotent) << e->name;
    EXPECT_TRUE(is_power_associative(a).holds) << e->name;
    if (e->dim() <= 4) {
      EXPECT_TRUE(is_associative(a).holds) << e->name;
      auto pc = power_chain(a);
      EXPECT_TRUE(pc.powers.size() < 3 || pc.powers[2].dim() == 0) << e->name;
    }
  }
}

TEST(Structure, A16NotAssociative) {
  auto r = is_associative(entry("A_{1,6}"));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, (std::vector<std::vector<std::size_t>>{{0}, {2}, {2}}));
}

TEST(Structure, PrincipalPowers) {
  const Algebra &a12 = entry("A_{1,2}");
  EXPECT_EQ(principal_power(a12, e(2, 1), 2), e(2, 2));
  EXPECT_TRUE(is_zero(principal_power(a12, e(2, 1), 3)));
  Algebra s = catalog::suttles();
  Vector x = e(5, 1);
  x[1] = 1;
  EXPECT_FALSE(is_zero(principal_power(s, x, 3)));
  EXPECT_TRUE(is_zero(principal_power(s, x, 4)));
}

TEST(Structure, SubspaceProducts) {
  Field q = Field::rationals();
  const Algebra &a12 = entry("A_{1,2}");
  EXPECT_EQ(subspace_product(a12, Subspace::full(q, 2), Subspace::full(q, 2)),
            Subspace::span(q, 2, {e(2, 2)}));
  EXPECT_EQ(subspace_product(a12, Subspace::full(q, 2), Subspace::zero(q, 2)).dim(), 0u);
  const Algebra &na = entry("A_{NA,5}");
  EXPECT_EQ(subspace_product(na, Subspace::full(q, 5), Subspace::full(q, 5)),
            Subspace::span(q, 5, {e(5, 2), e(5, 3), e(5, 5)}));
}

TEST(Structure, PowerChains) {
  auto pc = power_chain(entry("A_{1,2}"));
  ASSERT_TRUE(pc.vanished_at);
  EXPECT_EQ(*pc.vanished_at, 3u);
  EXPECT_EQ(is_nilpotent(entry("A_{0,1}")).nilpotency_class, 2u);
  EXPECT_FALSE(is_nilpotent(catalog::suttles()).nilpotent);
  EXPECT_TRUE(power_chain(catalog::suttles()).stabilized);
}

TEST(Structure, PowerChainMatchesRecomputation) {
  // A^k recomputed from scratch as the sum over i + j = k of A^i A^j.
  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    Algebra a = support::random_commutative(rng, 2 + t % 3, 1, 0.25);
    auto pc = power_chain(a);
    Field q = Field::rationals();
    std::vector<Subspace> direct{Subspace::full(q, a.dim())};
    for (std::size_t k = 2; k <= pc.powers.size(); ++k) {
      Subspace s = Subspace::zero(q, a.dim());
      for (std::size_t i = 1; i < k; ++i)
        s = subspace_sum(s, subspace_product(a, direct[i - 1], direct[k - i - 1]));
      direct.push_back(s);
    }
    EXPECT_EQ(direct, pc.powers);
  }
}

TEST(Structure, DerivedSeries) {
  EXPECT_TRUE(is_solvable(catalog::suttles()));
  EXPECT_TRUE(is_solvable(entry("A_{1,6}")));
  auto ds = derived_series(entry("A_{0,1}"));
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[1].dim(), 0u);
  EXPECT_FALSE(is_solvable(idempotent_line()));
}

TEST(Structure, Nilindex) {
  auto n13 = nilindex(entry("A_{1,3}"));
  EXPECT_TRUE(n13.found);
  EXPECT_EQ(n13.index, 3u);
  EXPECT_EQ(n13.witness, e(3, 1));
  auto n0 = nilindex(entry("A_{0,1}+A_{0,1}"));
  EXPECT_EQ(n0.index, 2u);
  EXPECT_FALSE(is_zero(n0.witness));
  Algebra s = catalog::suttles();
  auto ns = nilindex(s);
  EXPECT_EQ(ns.index, 4u);
  EXPECT_FALSE(is_zero(principal_power(s, ns.witness, 3)));
  EXPECT_FALSE(nilindex(idempotent_line()).found);
}

TEST(Structure, NilindexTwoForcesZeroTensor) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    Algebra a = support::random_commutative(rng, 1 + t % 4, 1, t % 5 == 0 ? 0.0 : 0.2);
    auto ni = nilindex(a);
    if (ni.found && ni.index <= 2)
      for (const auto &c : a.constants())
        EXPECT_TRUE(is_zero(c));
  }
}

TEST(Structure, Annihilator) {
  Field q = Field::rationals();
  EXPECT_EQ(annihilator(entry("A_{1,4}")), Subspace::span(q, 4, {e(4, 2), e(4, 4)}));
  EXPECT_EQ(annihilator(entry("A_{2,4}")), Subspace::span(q, 4, {e(4, 2)}));
  EXPECT_EQ(annihilator(entry("A_{0,1}^4")).dim(), 4u);
}

TEST(Structure, PowerAssociativityIsBounded) {
  auto r = is_power_associative(catalog::suttles());
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.max_degree, 6u);
  EXPECT_FALSE(is_jacobi(catalog::suttles()).holds);
}

TEST(DirectSum, TableRows) {
  Algebra z = entry("A_{0,1}"), a12 = entry("A_{1,2}");
  EXPECT_EQ(direct_sum(a12, z), entry("A_{1,2}+A_{0,1}"));
  EXPECT_EQ(direct_sum(a12, a12), entry("A_{1,2}+A_{1,2}"));
  Algebra empty(Field::rationals(), 0, {});
  EXPECT_EQ(direct_sum(a12, empty), a12);
  EXPECT_THROW(direct_sum(a12, catalog::build_A26(0, 0, Field::prime(5))), std::invalid_argument);
}
