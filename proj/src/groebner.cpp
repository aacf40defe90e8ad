#include "jjalg/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace jjalg::poly {

Polynomial reduce(const Polynomial &f, const std::vector<Polynomial> &divisors) {
  Polynomial remainder(f.ring());
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading();
    bool divided = false;
    for (const auto &g : divisors) {
      if (g.is_zero() || !divides(g.leading_monomial(), lt.monomial))
        continue;
      p = p - g.times(quotient(lt.monomial, g.leading_monomial()), lt.coeff / g.leading().coeff);
      divided = true;
      break;
    }
    if (!divided) {
      Polynomial t = Polynomial::term(f.ring(), lt.monomial, lt.coeff);
      remainder = remainder + t;
      p = p - t;
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial &f, const Polynomial &g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.times(quotient(l, f.leading_monomial()), 1 / f.leading().coeff) -
         g.times(quotient(l, g.leading_monomial()), 1 / g.leading().coeff);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto &p : polynomials)
    out.push_back(p.leading_monomial());
  return out;
}

GroebnerBasis buchberger(const std::vector<Polynomial> &generators, std::size_t max_pairs) {
  if (generators.empty())
    throw std::invalid_argument("buchberger needs at least one generator");
  RingPtr ring = generators.front().ring();

  std::vector<Polynomial> g;
  for (const auto &p : generators)
    if (!p.is_zero())
      g.push_back(p.monic());
  if (g.empty())
    return {ring, {}};

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      pairs.emplace_back(i, j);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > max_pairs)
      throw std::runtime_error("buchberger: S-pair budget exhausted");
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(g[i].leading_monomial(), g[j].leading_monomial()))
      continue;
    Polynomial r = reduce(s_polynomial(g[i], g[j]), g);
    if (r.is_zero())
      continue;
    g.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k)
      pairs.emplace_back(k, g.size() - 1);
  }

  // Minimize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].leading_monomial(), g[i].leading_monomial()))
        continue;
      // Equal leading monomials: keep the lowest index only.
      redundant = g[j].leading_monomial() != g[i].leading_monomial() || j < i;
    }
    if (!redundant)
      minimal.push_back(g[i]);
  }

  // Interreduce.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i)
        others.push_back(minimal[j]);
    minimal[i] = reduce(minimal[i], others).monic();
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial &a, const Polynomial &b) {
    return a.leading_monomial() > b.leading_monomial();
  });
  return {ring, std::move(minimal)};
}

std::vector<Monomial> standard_monomials(const GroebnerBasis &gb) {
  const std::size_t nvars = gb.ring->size();
  const auto lms = gb.leading_monomials();
  for (const auto &m : lms)
    if (degree(m) == 0)
      return {}; // unit ideal
  std::vector<unsigned> bound(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    for (const auto &m : lms) {
      bool pure = m[v] > 0;
      for (std::size_t u = 0; u < nvars && pure; ++u)
        if (u != v && m[u] != 0)
          pure = false;
      if (pure && (bound[v] == 0 || m[v] < bound[v]))
        bound[v] = m[v];
    }
    if (bound[v] == 0)
      throw std::domain_error("quotient is infinite-dimensional: no pure power of " +
                              gb.ring->variables[v] + " among the leading monomials");
  }

  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  while (true) {
    bool standard = std::none_of(lms.begin(), lms.end(),
                                 [&](const Monomial &lm) { return divides(lm, m); });
    if (standard)
      out.push_back(m);
    std::size_t v = 0;
    while (v < nvars && ++m[v] == bound[v])
      m[v++] = 0;
    if (v == nvars)
      break;
  }
  std::sort(out.begin(), out.end(), [](const Monomial &a, const Monomial &b) {
    if (degree(a) != degree(b))
      return degree(a) < degree(b);
    return a > b;
  });
  return out;
}

QuotientAlgebra quotient_algebra(const GroebnerBasis &gb) {
  auto basis = standard_monomials(gb);
  const std::size_t n = basis.size();
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    index[basis[i]] = i;

  std::vector<Scalar> constants(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial prod = Polynomial::term(gb.ring, product(basis[i], basis[j]), 1);
      Polynomial nf = reduce(prod, gb.polynomials);
      for (const auto &t : nf.terms()) {
        auto it = index.find(t.monomial);
        if (it == index.end())
          throw std::logic_error("normal form left the standard monomials");
        constants[(i * n + j) * n + it->second] = t.coeff;
      }
    }
  std::vector<std::string> labels;
  for (const auto &m : basis)
    labels.push_back(gb.ring->format(m));
  return {gb.ring, std::move(basis), Algebra(Field::rationals(), n, std::move(constants), labels)};
}

Algebra maximal_ideal_algebra(const QuotientAlgebra &q) {
  const std::size_t n = q.basis.size();
  if (n == 0 || degree(q.basis[0]) != 0)
    throw std::domain_error("quotient basis does not start with 1");
  const std::size_t m = n - 1;
  std::vector<Scalar> constants(m * m * m);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      if (!is_zero(q.algebra.constant(i, j, 0)))
        throw std::domain_error("product " + q.algebra.labels()[i] + "*" + q.algebra.labels()[j] +
                                " has a component on 1; not a local augmentation ideal");
      for (std::size_t k = 1; k < n; ++k)
        constants[((i - 1) * m + (j - 1)) * m + (k - 1)] = q.algebra.constant(i, j, k);
    }
  std::vector<std::string> labels(q.algebra.labels().begin() + 1, q.algebra.labels().end());
  return Algebra(Field::rationals(), m, std::move(constants), std::move(labels));
}

} // namespace jjalg::poly
