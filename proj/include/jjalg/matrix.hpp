#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jjalg/field.hpp"

namespace jjalg {

/// Dense row-major matrix over a Field.
class Matrix {
public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(Field field, std::size_t n);
  /// Builds from row lists; every entry is mapped into the field.
  static Matrix from_rows(Field field, const std::vector<Vector> &rows);
  static Matrix from_columns(Field field, std::size_t rows,
                             const std::vector<Vector> &columns);

  const Field &field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Vector apply(std::span<const Scalar> v) const;
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix &a, const Matrix &b);

struct RrefResult {
  Matrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form.
RrefResult rref(const Matrix &m);
std::size_t rank(const Matrix &m);
Scalar determinant(const Matrix &m);
/// Throws std::domain_error when m is singular.
Matrix inverse(const Matrix &m);
/// One solution of m * x = rhs, or nullopt when inconsistent.
std::optional<Vector> solve_linear(const Matrix &m, std::span<const Scalar> rhs);

/// Linear subspace of Field^ambient_dim in canonical form: the basis rows are
/// the nonzero rows of an RREF matrix, so equality is entry-wise.
class Subspace {
public:
  Subspace() = default;
  static Subspace zero(Field field, std::size_t ambient_dim);
  static Subspace full(Field field, std::size_t ambient_dim);
  static Subspace span(Field field, std::size_t ambient_dim,
                       const std::vector<Vector> &vectors);
  /// Row space of m.
  static Subspace row_space(const Matrix &m);

  const Field &field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix &basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace &other) const;

  friend bool operator==(const Subspace &, const Subspace &) = default;

private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

Subspace kernel(const Matrix &m);
Subspace subspace_sum(const Subspace &u, const Subspace &v);
inline bool subspace_contains(const Subspace &u, std::span<const Scalar> v) {
  return u.contains(v);
}

} // namespace jjalg
