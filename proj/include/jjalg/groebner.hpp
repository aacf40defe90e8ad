#pragma once

#include <cstddef>
#include <vector>

#include "jjalg/algebra.hpp"
#include "jjalg/polynomial.hpp"

namespace jjalg::poly {

/// Full multivariate division: the remainder has no term divisible by any
/// leading monomial of `divisors`.
Polynomial reduce(const Polynomial &f, const std::vector<Polynomial> &divisors);

Polynomial s_polynomial(const Polynomial &f, const Polynomial &g);

/// Reduced, monic lex Groebner basis, sorted by decreasing leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> polynomials;

  std::vector<Monomial> leading_monomials() const;
};

/// Buchberger's algorithm with the coprime-leading-monomial criterion.
/// `max_pairs` bounds the number of S-pairs processed (std::runtime_error
/// when exceeded).
GroebnerBasis buchberger(const std::vector<Polynomial> &generators,
                         std::size_t max_pairs = 200000);

/// Monomials not divisible by any leading monomial, sorted by degree then by
/// decreasing lex order; includes 1. Throws std::domain_error when the
/// quotient is infinite-dimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis &gb);

struct QuotientAlgebra {
  RingPtr ring;
  std::vector<Monomial> basis; // standard monomials, basis[0] == 1
  Algebra algebra;             // unital multiplication table over Q
};

QuotientAlgebra quotient_algebra(const GroebnerBasis &gb);

/// Drops the unit: the algebra spanned by the positive-degree standard
/// monomials. Throws std::domain_error when a product of positive-degree
/// monomials has a nonzero coefficient on 1.
Algebra maximal_ideal_algebra(const QuotientAlgebra &q);

} // namespace jjalg::poly
