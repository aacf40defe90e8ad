#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "jjalg/catalog.hpp"
#include "jjalg/groebner.hpp"
#include "jjalg/invariants.hpp"
#include "jjalg/structure.hpp"

using namespace jjalg;
using namespace jjalg::poly;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }

std::vector<Polynomial> parse_all(const RingPtr &r, const std::vector<std::string> &texts) {
  std::vector<Polynomial> out;
  for (const auto &t : texts)
    out.push_back(parse_polynomial(t, r));
  return out;
}

std::vector<Polynomial> example_generators(const RingPtr &r) {
  return parse_all(r, {"xy", "yz", "z^2", "y^2-xz", "x^3"});
}

} // namespace

TEST(Parser, Examples) {
  auto r = xyz();
  EXPECT_EQ(parse_polynomial("y^2 - x*z", r).terms().size(), 2u);
  EXPECT_TRUE(parse_polynomial("0", r).is_zero());
  EXPECT_EQ(parse_polynomial("x^2 + y^2 - z^2", r).terms().size(), 3u);
  EXPECT_EQ(parse_polynomial("xz", r), parse_polynomial("x*z", r));
  EXPECT_EQ(parse_polynomial("1/2 x - 3/4*y", r).to_string(), "1/2*x - 3/4*y");
  EXPECT_EQ(parse_polynomial("(x+y)^2", r), parse_polynomial("x^2 + 2xy + y^2", r));
}

TEST(Parser, Errors) {
  auto r = xyz();
  EXPECT_THROW(parse_polynomial("x + q", r), ParseError);
  EXPECT_THROW(parse_polynomial("x +", r), ParseError);
  EXPECT_THROW(parse_polynomial("x^", r), ParseError);
  EXPECT_THROW(parse_polynomial("1/0", r), ParseError);
  try {
    parse_polynomial("x + y $", r);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.column(), 7u);
  }
}

TEST(Parser, IdealShorthandAndInference) {
  auto id = parse_ideal("(x,y)^3");
  EXPECT_EQ(id.ring->variables, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(id.generators.size(), 4u); // x^3, x^2y, xy^2, y^3 after deduplication
  auto five = parse_ideal("(x,y,z,w,v)^2");
  EXPECT_EQ(five.ring->variables, (std::vector<std::string>{"x", "y", "z", "w", "v"}));
  EXPECT_EQ(five.generators.size(), 15u);
  auto a75 = parse_ideal("(x^2,y^2,z^2,w^2,xy-zw,xz,xw,yz,yw)");
  EXPECT_EQ(a75.ring->variables, (std::vector<std::string>{"x", "y", "z", "w"}));
  EXPECT_THROW(parse_ideal("(x,y"), ParseError);
  EXPECT_THROW(parse_ideal("(x,q)", {"x", "y"}), ParseError);
}

TEST(Reduce, Basics) {
  auto r = xyz();
  auto xy = parse_polynomial("xy", r);
  EXPECT_TRUE(reduce(xy, {xy}).is_zero());
  auto gb = buchberger(example_generators(r));
  EXPECT_EQ(reduce(parse_polynomial("xz", r), gb.polynomials), parse_polynomial("y^2", r));
  for (const auto &m : standard_monomials(gb)) {
    auto p = Polynomial::term(r, m, 1);
    EXPECT_EQ(reduce(p, gb.polynomials), p);
  }
}

TEST(Buchberger, WorkedExample) {
  auto r = xyz();
  auto gb = buchberger(example_generators(r));
  EXPECT_EQ(gb.polynomials, parse_all(r, {"x^3", "xy", "xz - y^2", "y^3", "yz", "z^2"}));
}

TEST(Buchberger, TrivialCases) {
  auto r = make_ring({"x"});
  auto gb = buchberger({parse_polynomial("x", r)});
  EXPECT_EQ(gb.polynomials.size(), 1u);
  auto r2 = make_ring({"x", "y"});
  auto mono = parse_all(r2, {"x^2", "xy", "y^2"});
  EXPECT_EQ(buchberger(mono).polynomials, mono);
  EXPECT_THROW(buchberger({}), std::invalid_argument);
}

TEST(Buchberger, GroebnerProperties) {
  for (const auto *e : catalog::list(5)) {
    if (!e->ideal_spec)
      continue;
    auto id = parse_ideal(*e->ideal_spec);
    auto gb = buchberger(id.generators);
    for (const auto &g : id.generators)
      EXPECT_TRUE(reduce(g, gb.polynomials).is_zero()) << e->name;
    for (std::size_t i = 0; i < gb.polynomials.size(); ++i) {
      EXPECT_EQ(gb.polynomials[i].leading().coeff, 1);
      for (std::size_t j = i + 1; j < gb.polynomials.size(); ++j) {
        EXPECT_TRUE(reduce(s_polynomial(gb.polynomials[i], gb.polynomials[j]), gb.polynomials)
                        .is_zero());
        EXPECT_FALSE(divides(gb.polynomials[i].leading_monomial(),
                             gb.polynomials[j].leading_monomial()));
      }
    }
  }
}

TEST(Buchberger, CanonicalUnderPermutation) {
  auto r = xyz();
  auto gens = example_generators(r);
  auto reference = buchberger(gens).polynomials;
  std::mt19937_64 rng(71);
  for (int t = 0; t < 10; ++t) {
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(buchberger(gens).polynomials, reference);
  }
}

TEST(Reduce, Idempotent) {
  auto r = xyz();
  auto gb = buchberger(example_generators(r));
  for (const char *t : {"x^2 y z + 3 x z", "y^4 - z", "x^5 + x*z - 1/2"}) {
    auto once = reduce(parse_polynomial(t, r), gb.polynomials);
    EXPECT_EQ(reduce(once, gb.polynomials), once);
  }
}

TEST(StandardMonomials, Examples) {
  auto r = xyz();
  auto gb = buchberger(example_generators(r));
  std::vector<std::string> names;
  for (const auto &m : standard_monomials(gb))
    names.push_back(r->format(m));
  EXPECT_EQ(names, (std::vector<std::string>{"1", "x", "y", "z", "x^2", "y^2"}));

  auto r1 = make_ring({"x"});
  EXPECT_EQ(standard_monomials(buchberger({parse_polynomial("x", r1)})).size(), 1u);
  auto r2 = make_ring({"x", "y"});
  EXPECT_EQ(standard_monomials(buchberger(parse_all(r2, {"x^2", "xy", "y^2"}))).size(), 3u);
  EXPECT_THROW(standard_monomials(buchberger(parse_all(r2, {"x^2", "xy"}))), std::domain_error);
}

TEST(Quotient, WorkedExampleProducts) {
  auto r = xyz();
  auto q = quotient_algebra(buchberger(example_generators(r)));
  auto idx = [&](const std::string &name) {
    for (std::size_t i = 0; i < q.basis.size(); ++i)
      if (r->format(q.basis[i]) == name)
        return i;
    throw std::out_of_range(name);
  };
  auto prod = [&](const std::string &a, const std::string &b) {
    return q.algebra.basis_product(idx(a), idx(b));
  };
  EXPECT_EQ(prod("x", "x"), q.algebra.basis_vector(idx("x^2")));
  EXPECT_EQ(prod("x", "z"), q.algebra.basis_vector(idx("y^2")));
  EXPECT_TRUE(is_zero(prod("x", "x^2")));
  EXPECT_TRUE(is_commutative(q.algebra).commutative);
  EXPECT_TRUE(is_associative(q.algebra).holds);
}

TEST(Quotient, MaximalIdealMatchesA25InDisplayOrder) {
  auto r = xyz();
  auto m = maximal_ideal_algebra(quotient_algebra(buchberger(example_generators(r))));
  // Basis is (x, y, z, x^2, y^2); the display order is (x, x^2, y, z, y^2).
  Algebra display = permute_basis(m, {0, 3, 1, 2, 4});
  EXPECT_EQ(display, catalog::get("A_{2,5}").algebra);
}

TEST(Quotient, ShorthandIdeals) {
  auto zero = maximal_ideal_algebra(quotient_algebra(buchberger(parse_ideal("(x,y,z,w,v)^2").generators)));
  EXPECT_EQ(zero.dim(), 5u);
  for (const auto &c : zero.constants())
    EXPECT_TRUE(is_zero(c));
  auto a15 = maximal_ideal_algebra(quotient_algebra(buchberger(parse_ideal("(x,y)^3").generators)));
  EXPECT_EQ(fingerprint(a15), fingerprint(catalog::get("A_{1,5}").algebra));
}

TEST(Quotient, RejectsUnitComponent) {
  auto r = make_ring({"x"});
  // x^2 = 1 makes x a unit: x * x has a component on 1.
  auto q = quotient_algebra(buchberger({parse_polynomial("x^2 - 1", r)}));
  EXPECT_THROW(maximal_ideal_algebra(q), std::domain_error);
}

TEST(Quotient, IdealRowsAreAssociativeJacobiJordan) {
  std::size_t rows = 0;
  for (const auto *e : catalog::list(5)) {
    if (!e->ideal_spec)
      continue;
    ++rows;
    auto id = parse_ideal(*e->ideal_spec);
    auto q = quotient_algebra(buchberger(id.generators));
    EXPECT_EQ(q.basis.size(), 6u) << e->name;
    auto m = maximal_ideal_algebra(q);
    EXPECT_TRUE(is_commutative(m).commutative) << e->name;
    EXPECT_TRUE(is_associative(m).holds) << e->name;
    EXPECT_TRUE(is_jacobi(m).holds) << e->name;
    auto pc = power_chain(m);
    EXPECT_TRUE(pc.powers.size() < 3 || pc.powers[2].dim() == 0) << e->name;
  }
  EXPECT_EQ(rows, 14u);
}
