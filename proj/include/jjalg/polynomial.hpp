#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jjalg/field.hpp"
#include "jjalg/parse_error.hpp"

namespace jjalg::poly {

/// Exponent vector over the ring's ordered variable list.
using Monomial = std::vector<unsigned>;

/// Ordered variable list; the first variable is the largest under lex.
struct Ring {
  std::vector<std::string> variables;

  std::size_t size() const { return variables.size(); }
  std::string format(const Monomial &m) const;
};

using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(std::vector<std::string> variables);

/// Lexicographic comparison: the first differing exponent decides.
inline std::strong_ordering lex_compare(const Monomial &a, const Monomial &b) { return a <=> b; }
bool divides(const Monomial &a, const Monomial &b);
Monomial lcm(const Monomial &a, const Monomial &b);
Monomial quotient(const Monomial &num, const Monomial &den); // requires divides(den, num)
Monomial product(const Monomial &a, const Monomial &b);
unsigned degree(const Monomial &m);
bool coprime(const Monomial &a, const Monomial &b);

struct Term {
  Monomial monomial;
  Scalar coeff;
  friend bool operator==(const Term &, const Term &) = default;
};

/// Sparse polynomial over Q with terms sorted by decreasing lex order and no
/// zero coefficients.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  static Polynomial constant(RingPtr ring, const Scalar &c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, const Scalar &c);

  const RingPtr &ring() const { return ring_; }
  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term &leading() const { return terms_.front(); }
  const Monomial &leading_monomial() const { return terms_.front().monomial; }

  Polynomial operator+(const Polynomial &o) const;
  Polynomial operator-(const Polynomial &o) const;
  Polynomial operator*(const Polynomial &o) const;
  Polynomial operator-() const;
  Polynomial times(const Monomial &m, const Scalar &c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.terms_ == b.terms_; }

private:
  void check_ring(const Polynomial &o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Grammar: sum of terms separated by '+' / '-'; a term is a product of
/// factors joined by '*' or juxtaposition; a factor is an integer or "a/b"
/// rational, a variable with optional "^e", or a parenthesized polynomial with
/// optional "^e". Whitespace is insignificant. Variables are matched greedily
/// against the ring's names, so "xz" reads as x*z when x and z are variables.
Polynomial parse_polynomial(const std::string &text, const RingPtr &ring);

struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

/// "(g1, ..., gk)" with optional power shorthand "(...)^m", which expands to
/// all products of m generators. When `variables` is empty they are inferred:
/// every letter is a variable, ordered x > y > z > w > v, then alphabetically.
Ideal parse_ideal(const std::string &text, std::vector<std::string> variables = {});
std::vector<std::string> infer_variables(const std::string &text);

} // namespace jjalg::poly
