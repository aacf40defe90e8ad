#pragma once

#include <random>

#include "jjalg/algebra.hpp"
#include "jjalg/matrix.hpp"

namespace jjalg::support {

/// Random n x n rational matrix with small entries and nonzero determinant.
inline Matrix random_invertible(std::mt19937_64 &rng, std::size_t n,
                                Field field = Field::rationals()) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  while (true) {
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(r, c) = field.from(Scalar(entry(rng), den(rng)));
    if (!is_zero(determinant(m)))
      return m;
  }
}

/// Integer matrix with determinant +-1 (product of elementary operations), so
/// conjugation keeps integer structure constants.
inline Matrix random_unimodular(std::mt19937_64 &rng, std::size_t n) {
  Matrix m = Matrix::identity(Field::rationals(), n);
  if (n < 2)
    return m;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (int step = 0; step < 4 * static_cast<int>(n); ++step) {
    std::size_t r = idx(rng), s = idx(rng);
    if (r == s)
      continue;
    const Scalar k = mult(rng);
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) += k * m(s, c);
  }
  return m;
}

/// Symmetrized random integer structure tensor, entries in [-range, range],
/// with roughly `density` of the (i <= j, k) slots nonzero.
inline Algebra random_commutative(std::mt19937_64 &rng, std::size_t n, int range = 2,
                                  double density = 0.3) {
  std::uniform_int_distribution<int> entry(-range, range);
  std::bernoulli_distribution keep(density);
  Algebra::Builder b(Field::rationals(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k)
        if (keep(rng))
          v[k] = entry(rng);
      b.set(i, j, v, true);
    }
  return b.build();
}

inline Vector random_vector(std::mt19937_64 &rng, std::size_t n, int range = 4) {
  std::uniform_int_distribution<int> entry(-range, range);
  Vector v(n);
  for (auto &x : v)
    x = entry(rng);
  return v;
}

} // namespace jjalg::support
