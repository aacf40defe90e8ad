#include <gtest/gtest.h>

#include <map>

#include "jjalg/catalog.hpp"
#include "jjalg/groebner.hpp"
#include "jjalg/invariants.hpp"
#include "jjalg/structure.hpp"
#include "fixtures.hpp"

using namespace jjalg;

namespace {

Vector e(std::size_t n, std::size_t i, Scalar c = 1) {
  Vector v(n);
  v[i - 1] = c;
  return v;
}

Vector ev(const Algebra &a, std::size_t i, std::size_t j) { return a.basis_product(i - 1, j - 1); }

Vector mul(const Algebra &a, const Vector &x, const Vector &y) { return a.product(x, y); }


} // namespace

TEST(Catalog, Counts) {
  std::size_t d13 = 0;
  for (std::size_t d = 1; d <= 3; ++d)
    d13 += catalog::list(d, true).size();
  EXPECT_EQ(d13, 6u);
  EXPECT_EQ(catalog::list(4, true).size(), 6u);
  EXPECT_EQ(catalog::list(5, true).size(), 15u);
  EXPECT_EQ(catalog::list(6, true).size(), 5u);
  auto two = catalog::list(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0]->name, "A_{0,1}+A_{0,1}");
  EXPECT_EQ(two[1]->name, "A_{1,2}");
  EXPECT_THROW(catalog::get("A_{9,9}"), std::out_of_range);
}

TEST(Catalog, NamesUnique) {
  std::map<std::string, int> seen;
  for (const auto &en : catalog::entries())
    EXPECT_EQ(++seen[en.name], 1) << en.name;
}

TEST(Catalog, ProductTables) {
  const Algebra &a14 = catalog::get("A_{1,4}").algebra;
  EXPECT_EQ(ev(a14, 1, 1), e(4, 2));
  EXPECT_EQ(ev(a14, 1, 3), e(4, 4));
  EXPECT_EQ(ev(a14, 3, 1), e(4, 4));
  const Algebra &a75 = catalog::get("A_{7,5}").algebra;
  EXPECT_EQ(ev(a75, 1, 1), e(5, 2));
  EXPECT_EQ(ev(a75, 3, 3), e(5, 2, -1));
  EXPECT_EQ(ev(a75, 4, 5), e(5, 2, Scalar(1, 2)));
  EXPECT_EQ(ev(a75, 5, 4), e(5, 2, Scalar(1, 2)));
  const Algebra &a35 = catalog::get("A_{3,5}").algebra;
  Vector v = e(5, 2, -1);
  v[4] = 1;
  EXPECT_EQ(ev(a35, 3, 3), v);
}

TEST(Catalog, ExpectedRecordsMatchComputation) {
  for (const auto &en : catalog::entries()) {
    const Algebra &a = en.algebra;
    EXPECT_TRUE(is_commutative(a).commutative) << en.name;
    EXPECT_EQ(is_jacobi(a).holds, en.expected.jacobi_jordan) << en.name;
    EXPECT_EQ(is_associative(a).holds, en.expected.associative) << en.name;
    auto pc = power_chain(a);
    EXPECT_EQ(pc.powers.size() < 3 || pc.powers[2].dim() == 0, en.expected.cube_zero) << en.name;
    auto ni = nilindex(a);
    EXPECT_TRUE(ni.found) << en.name;
    EXPECT_EQ(ni.index, en.expected.nilindex) << en.name;
    EXPECT_EQ(!en.summands.empty(), en.expected.decomposable) << en.name;
  }
}

TEST(Catalog, DecomposableEntriesAreDirectSums) {
  for (const auto &en : catalog::entries()) {
    if (en.summands.empty())
      continue;
    Algebra sum = catalog::get(en.summands[0]).algebra;
    for (std::size_t i = 1; i < en.summands.size(); ++i)
      sum = direct_sum(sum, catalog::get(en.summands[i]).algebra);
    EXPECT_EQ(sum, en.algebra) << en.name;
  }
}

TEST(Catalog, NonAssociativityWitnesses) {
  const Algebra &na = catalog::get("A_{NA,5}").algebra;
  Vector e1 = e(5, 1), e4 = e(5, 4);
  EXPECT_EQ(mul(na, mul(na, e1, e1), e4), e(5, 3));
  EXPECT_EQ(mul(na, e1, mul(na, e1, e4)), e(5, 3, Scalar(-1, 2)));

  const Algebra &a16 = catalog::get("A_{1,6}").algebra;
  Vector f1 = e(6, 1), f3 = e(6, 3);
  EXPECT_EQ(mul(a16, mul(a16, f1, f3), f3), e(6, 6, Scalar(-1, 2)));
  EXPECT_EQ(mul(a16, f1, mul(a16, f3, f3)), e(6, 6));

  for (const char *name : {"A_{2,6}(0,0)", "A_{2,6}(0,1)", "A_{2,6}(1,0)", "A_{2,6}(1,1)"}) {
    const Algebra &a = catalog::get(name).algebra;
    Vector g1 = e(6, 1), g4 = e(6, 4);
    EXPECT_EQ(mul(a, mul(a, g4, g1), g1), e(6, 6, Scalar(-1, 2))) << name;
    EXPECT_EQ(mul(a, g4, mul(a, g1, g1)), e(6, 6)) << name;
  }
}

TEST(Catalog, BuildA26) {
  EXPECT_EQ(catalog::build_A26(1, 0), catalog::get("A_{2,6}(1,0)").algebra);
  EXPECT_TRUE(is_zero(catalog::build_A26(0, 0).basis_product(0, 2)));
  Algebra a20 = catalog::build_A26(2, 0);
  EXPECT_TRUE(is_jacobi(a20).holds);
  EXPECT_FALSE(is_associative(a20).holds);
  Vector assoc = associator(a20, 3, 0, 0);
  EXPECT_EQ(assoc, e(6, 6, Scalar(-3, 2)));
}

TEST(Catalog, HeisenbergAndSuttles) {
  Algebra h1 = catalog::heisenberg(1);
  EXPECT_EQ(h1.dim(), 3u);
  EXPECT_EQ(ev(h1, 1, 2), e(3, 3));
  EXPECT_EQ(ev(h1, 2, 1), e(3, 3));
  Algebra h2 = catalog::heisenberg(2);
  EXPECT_EQ(h2.dim(), 5u);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j)
      nonzero += !is_zero(h2.basis_product(i, j));
  EXPECT_EQ(nonzero, 2u);
  for (std::size_t m = 1; m <= 3; ++m) {
    EXPECT_TRUE(is_jacobi(catalog::heisenberg(m)).holds);
    EXPECT_TRUE(is_associative(catalog::heisenberg(m)).holds);
  }
  EXPECT_THROW(catalog::heisenberg(0), std::invalid_argument);

  Algebra s = catalog::suttles();
  EXPECT_EQ(ev(s, 1, 2), e(5, 3));
  EXPECT_EQ(ev(s, 1, 5), e(5, 3, -1));
  EXPECT_EQ(ev(s, 2, 3), e(5, 5));
}

TEST(Catalog, IdealSpecs) {
  EXPECT_EQ(catalog::ideal_spec("A_{1,5}"), "(x,y)^3");
  EXPECT_EQ(catalog::ideal_spec("A_{0,1}^5"), "(x,y,z,w,v)^2");
  EXPECT_EQ(catalog::ideal_spec("A_{7,5}"), "(x^2,y^2,z^2,w^2,xy-zw,xz,xw,yz,yw)");
  EXPECT_THROW(catalog::ideal_spec("A_{NA,5}"), std::out_of_range);
  EXPECT_THROW(catalog::ideal_spec("A_{1,4}"), std::out_of_range);
  EXPECT_THROW(catalog::ideal_spec("nope"), std::out_of_range);
  std::size_t count = 0;
  for (const auto &en : catalog::entries())
    count += en.ideal_spec.has_value();
  EXPECT_EQ(count, 14u);
}

TEST(Catalog, FrozenFingerprints) {
  ASSERT_EQ(support::kFrozenFingerprints.size(), catalog::entries().size());
  for (const auto &en : catalog::entries()) {
    auto it = support::kFrozenFingerprints.find(en.name);
    ASSERT_NE(it, support::kFrozenFingerprints.end()) << en.name;
    EXPECT_EQ(to_string(fingerprint(en.algebra)), it->second) << en.name;
  }
}

TEST(Catalog, IdealPipelineMatchesFixtures) {
  for (const auto *en : catalog::list(5)) {
    if (!en->ideal_spec)
      continue;
    auto id = poly::parse_ideal(*en->ideal_spec);
    auto m = poly::maximal_ideal_algebra(poly::quotient_algebra(poly::buchberger(id.generators)));
    EXPECT_EQ(to_string(fingerprint(m)), support::kFrozenFingerprints.at(en->name)) << en->name;
  }
}

TEST(Catalog, SeparationInLowDimensions) {
  for (std::size_t d = 1; d <= 4; ++d) {
    auto entries = catalog::list(d, true);
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j)
        EXPECT_NE(fingerprint(entries[i]->algebra), fingerprint(entries[j]->algebra))
            << entries[i]->name << " vs " << entries[j]->name;
  }
}

TEST(Catalog, KnownCollisions) {
  // Fingerprints do not separate these; recorded, not claimed distinct.
  EXPECT_EQ(fingerprint(catalog::get("A_{3,5}").algebra),
            fingerprint(catalog::get("A_{1,2}+A_{1,3}").algebra));
  EXPECT_EQ(fingerprint(catalog::get("A_{2,6}(0,1)").algebra),
            fingerprint(catalog::get("A_{2,6}(1,0)").algebra));
}
