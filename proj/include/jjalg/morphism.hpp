#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "jjalg/algebra.hpp"
#include "jjalg/matrix.hpp"

namespace jjalg {

/// Linear map between coordinate spaces. Column j of the matrix is the image
/// of domain basis vector e_j, so rows = codomain dim, cols = domain dim.
class LinearMap {
public:
  LinearMap() = default;
  explicit LinearMap(Matrix columns_are_images) : m_(std::move(columns_are_images)) {}

  /// Interprets row j of `m` as the image of e_j.
  static LinearMap from_rows_as_images(const Matrix &m) { return LinearMap(m.transpose()); }
  static LinearMap identity(Field field, std::size_t n) {
    return LinearMap(Matrix::identity(field, n));
  }

  const Matrix &matrix() const { return m_; }
  std::size_t domain_dim() const { return m_.cols(); }
  std::size_t codomain_dim() const { return m_.rows(); }

  Vector operator()(std::span<const Scalar> v) const { return m_.apply(v); }

  /// (g after f)
  friend LinearMap compose(const LinearMap &g, const LinearMap &f) {
    return LinearMap(g.m_ * f.m_);
  }

  friend bool operator==(const LinearMap &, const LinearMap &) = default;

private:
  Matrix m_;
};

struct HomomorphismCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness; // 0-based (i, j)
};

/// f(e_i * e_j) == f(e_i) * f(e_j) for all basis pairs.
HomomorphismCheck is_homomorphism(const LinearMap &f, const Algebra &a, const Algebra &b);

struct IsomorphismCheck {
  bool homomorphism = false;
  bool invertible = false;
  Scalar determinant;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  bool holds() const { return homomorphism && invertible; }
};

IsomorphismCheck is_isomorphism(const LinearMap &f, const Algebra &a, const Algebra &b);

} // namespace jjalg
