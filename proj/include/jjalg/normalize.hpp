#pragma once

#include <cstdint>
#include <stdexcept>

#include "jjalg/algebra.hpp"
#include "jjalg/morphism.hpp"

namespace jjalg {

/// The non-associative 5-dimensional Jacobi-Jordan normal form:
///   e1e1 = e2, e1e4 = e5, e1e5 = -1/2 e3, e2e4 = e3 (commutative).
Algebra na5_normal_form(Field field = Field::rationals());

struct Dim5NormalizationData {
  Vector x, y;
  Scalar alpha, beta, gamma; // y^2 = alpha (y x^2) + beta x^2 + gamma (y x)
  /// Columns are the new basis e1..e5 in old coordinates, i.e. a map from
  /// the normal form into the input algebra.
  LinearMap new_basis;
};

struct Dim5Normalization {
  Dim5NormalizationData data;
  Algebra normalized;
};

class NormalizationError : public std::runtime_error {
public:
  enum class Kind { WrongShape, CubeVanishes, NoGoodPair, ConstraintViolated, NotNormalForm };
  NormalizationError(Kind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Brings a 5-dimensional commutative Jacobi-Jordan algebra with A^3 != 0
/// into the normal form. Picks x with x^2 != 0 and a basis vector y with
/// y x^2 != 0, expresses y^2 in {y x^2, x^2, y x}, checks 4 beta = -gamma^2
/// and uses the basis
///   x, x^2, y x^2, y - alpha/2 x^2 - gamma/2 x, y x - gamma/2 x^2.
/// Throws NormalizationError when any step fails.
Dim5Normalization normalize_dim5(const Algebra &a, std::uint64_t seed = 0x5eed);

} // namespace jjalg
