#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jjalg/algebra.hpp"

namespace jjalg {

/// A nonassociative word: a rooted binary tree whose leaves are variables.
class Word {
public:
  static Word variable(std::size_t var);

  friend Word operator*(const Word &left, const Word &right);

  /// Right-normed principal power: x^1 = x, x^{k+1} = x * x^k.
  static Word power(const Word &x, std::size_t k);

  /// Variables in left-to-right leaf order.
  std::vector<std::size_t> leaves() const;
  std::size_t degree_in(std::size_t var) const;
  std::string to_string(const std::vector<std::string> &names) const;

  /// Evaluates the tree with leaf number `i` (in leaves() order) bound to
  /// values[i].
  Vector evaluate(const Algebra &a, const std::vector<const Vector *> &values) const;

  struct Node {
    long var = -1; // leaf when >= 0
    std::size_t left = 0, right = 0;
  };
  /// Post-order node list; the root is the last entry.
  const std::vector<Node> &nodes() const { return nodes_; }

private:

  Vector eval_node(std::size_t node, const Algebra &a,
                   const std::vector<const Vector *> &values, std::size_t &next) const;
  void to_string_node(std::size_t node, const std::vector<std::string> &names,
                      std::string &out) const;

  std::vector<Node> nodes_; // root is nodes_.back()
};

/// A polynomial identity: sum of coeff * word, asserted to vanish for all
/// substitutions of algebra elements.
class Identity {
public:
  struct Term {
    Scalar coeff;
    Word word;
  };

  Identity(std::string name, std::vector<std::string> variables)
      : name_(std::move(name)), variables_(std::move(variables)) {}

  Identity &add(const Scalar &coeff, Word word);

  const std::string &name() const { return name_; }
  const std::vector<std::string> &variables() const { return variables_; }
  const std::vector<Term> &terms() const { return terms_; }

  /// Highest degree of any single variable in any term.
  std::size_t max_variable_degree() const;

  // Standard identities.
  static Identity commutativity();
  static Identity jacobi();
  static Identity associativity();
  /// (x*y)*x^2 - x*(y*x^2)
  static Identity jordan();
  /// x^m = 0
  static Identity nil(std::size_t m);
  /// x^i * x^j - x^{i+j}
  static Identity power_associativity(std::size_t i, std::size_t j);

private:
  std::string name_;
  std::vector<std::string> variables_;
  std::vector<Term> terms_;
};

struct IdentityCheck {
  bool holds = true;
  /// Basis indices (0-based) substituted for the fresh variables, grouped per
  /// original variable, for the first failing evaluation.
  std::optional<std::vector<std::vector<std::size_t>>> witness;
  Vector value; // nonzero evaluation at the witness
};

/// Checks an identity by full multilinearization: each variable of degree d
/// becomes d fresh variables, and the multilinear part is evaluated on every
/// choice of basis vectors. Terms are split into multihomogeneous components
/// which are checked separately.
///
/// Throws std::domain_error if the field characteristic does not exceed the
/// largest variable degree.
IdentityCheck check_identity(const Algebra &a, const Identity &id);

/// Evaluates a multilinear identity directly on basis tuples (no symmetrization).
/// Only meaningful when every variable has degree 1 in every term.
IdentityCheck check_multilinear_on_basis(const Algebra &a, const Identity &id);

} // namespace jjalg
