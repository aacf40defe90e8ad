#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jjalg/field.hpp"
#include "jjalg/matrix.hpp"

namespace jjalg {

/// Finite-dimensional algebra given by structure constants:
///   e_i * e_j = sum_k c[i][j][k] e_k   (indices 0-based).
/// Commutativity is not assumed.
class Algebra {
public:
  Algebra() = default;
  /// `constants` is indexed [(i * n + j) * n + k]; entries are mapped into
  /// the field. Labels default to e1..en.
  Algebra(Field field, std::size_t n, std::vector<Scalar> constants,
          std::vector<std::string> labels = {});

  static Algebra zero(Field field, std::size_t n);

  /// Builder: set e_i * e_j (0-based) to the given vector.
  class Builder;

  const Field &field() const { return field_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string> &labels() const { return labels_; }

  const Scalar &constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  const std::vector<Scalar> &constants() const { return c_; }

  /// e_i * e_j as a coordinate vector.
  Vector basis_product(std::size_t i, std::size_t j) const;
  Vector product(std::span<const Scalar> u, std::span<const Scalar> v) const;
  Vector basis_vector(std::size_t i) const;

  bool is_zero_product() const;

  /// Same constants, same field (labels are ignored).
  friend bool operator==(const Algebra &a, const Algebra &b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.c_ == b.c_;
  }

private:
  struct Entry {
    std::size_t k;
    Scalar value;
  };

  void index_nonzeros();

  Field field_;
  std::size_t n_ = 0;
  std::vector<Scalar> c_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Entry>> nonzero_; // per (i, j)
};

class Algebra::Builder {
public:
  Builder(Field field, std::size_t n) : field_(field), n_(n), c_(n * n * n) {}

  /// e_i * e_j := value (0-based). With `symmetric`, also sets e_j * e_i and
  /// throws std::invalid_argument on a conflicting earlier declaration.
  Builder &set(std::size_t i, std::size_t j, const Vector &value, bool symmetric = true);
  /// Convenience: e_i * e_j := coeff * e_k, accumulating onto existing terms.
  Builder &term(std::size_t i, std::size_t j, std::size_t k, const Scalar &coeff,
                bool symmetric = true);
  Builder &labels(std::vector<std::string> labels);

  Algebra build() const;

private:
  void assign(std::size_t i, std::size_t j, const Vector &value);

  Field field_;
  std::size_t n_;
  std::vector<Scalar> c_;
  std::vector<bool> declared_ = std::vector<bool>(n_ * n_, false);
  std::vector<std::string> labels_;
};

struct CommutativityResult {
  bool commutative = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness; // 0-based (i, j)
};

CommutativityResult is_commutative(const Algebra &a);

/// Block-diagonal sum; labels concatenated (second block's default labels
/// are renumbered).
Algebra direct_sum(const Algebra &a, const Algebra &b);

/// The algebra on the same space with product x o y = P^{-1}(Px * Py).
/// Throws std::domain_error when P is singular.
Algebra conjugate(const Algebra &a, const Matrix &p);

/// Relabels basis vectors: new e_i is old e_{order[i]}.
Algebra permute_basis(const Algebra &a, const std::vector<std::size_t> &order);

/// Associator (x*y)*z - x*(y*z) on basis vectors.
Vector associator(const Algebra &a, std::size_t i, std::size_t j, std::size_t k);

std::string format_vector(std::span<const Scalar> v,
                          const std::vector<std::string> &labels = {});

} // namespace jjalg
