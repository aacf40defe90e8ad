#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jjalg/algebra.hpp"
#include "jjalg/morphism.hpp"

namespace jjalg::catalog {

/// Properties the tables assert for an entry. The test suite recomputes them.
struct Expected {
  bool jacobi_jordan = true;
  bool associative = true;
  bool cube_zero = true; // A^3 = 0
  std::size_t nilindex = 3;
  bool decomposable = false;
};

struct Entry {
  std::string name;
  Algebra algebra;
  Expected expected;
  std::string source;
  /// Generators of a local ideal I with dim Q[vars]/I = dim + 1 (dim-5 associative rows).
  std::optional<std::string> ideal_spec;
  /// Names of the direct summands for decomposable entries.
  std::vector<std::string> summands;
  /// False for auxiliary entries (Suttles, Heisenberg) that are not rows of
  /// a classification table.
  bool classification = true;

  std::size_t dim() const { return algebra.dim(); }
};

/// The whole registry in table order.
const std::vector<Entry> &entries();

/// Throws std::out_of_range for an unknown name.
const Entry &get(std::string_view name);

std::vector<const Entry *> list(std::optional<std::size_t> dim = std::nullopt,
                                bool classification_only = false);

/// e1e1 = e2, e1e3 = -beta e2, e1e4 = e5, e1e5 = -1/2 e6, e2e4 = e6,
/// e3e3 = delta e6, e3e5 = beta e6 (commutative).
Algebra build_A26(const Scalar &beta, const Scalar &delta, Field field = Field::rationals());

/// The 6x6 matrix phi(beta), row by row. Requires beta != 0.
Matrix phi_matrix(const Scalar &beta, Field field = Field::rationals());

/// phi(beta) read with columns as images. This is the reading under which it
/// is an isomorphism A_{2,6}(1,0) -> A_{2,6}(beta,0); the three other
/// readings (rows as images, or the opposite direction) fail for beta != 1.
LinearMap phi(const Scalar &beta, Field field = Field::rationals());

/// Commutative Heisenberg algebra H_m on x_1..x_m, y_1..y_m, z with x_i y_i = z.
Algebra heisenberg(std::size_t m, Field field = Field::rationals());

/// Suttles' commutative power-associative nilalgebra (not nilpotent).
Algebra suttles(Field field = Field::rationals());

/// The ideal for one of the 14 associative dim-5 entries.
/// Throws std::out_of_range for unknown or non-associative entries.
const std::string &ideal_spec(std::string_view name);

} // namespace jjalg::catalog
