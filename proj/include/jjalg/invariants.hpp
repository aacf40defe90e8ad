#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jjalg/algebra.hpp"
#include "jjalg/matrix.hpp"

namespace jjalg {

struct DerivationSpace {
  std::size_t dim = 0;
  std::vector<Matrix> basis; // column convention: column j is D(e_j)
};

/// Solves D(e_i e_j) = D(e_i) e_j + e_i D(e_j) for all basis pairs.
DerivationSpace derivation_space(const Algebra &a);

/// Isomorphism invariants that are ranks of linear systems over the ground
/// field, so they do not change under field extension. Two algebras with
/// different fingerprints are non-isomorphic over any extension.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> dims_power_chain; // dim A^k, k = 1, 2, ...
  std::optional<std::size_t> nilpotency_class;
  std::optional<std::size_t> nilindex; // empty: not a nilalgebra up to the bound
  std::size_t dim_annihilator = 0;
  std::size_t dim_derivations = 0;
  bool associative = false;

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
};

Fingerprint fingerprint(const Algebra &a);

/// Human-readable one-liner, e.g. "dim=4 A^k=(4,2,0) class=3 nil=3 ann=2 der=6 assoc=1".
std::string to_string(const Fingerprint &fp);

/// Field names whose values differ.
std::vector<std::string> fingerprint_diff(const Fingerprint &a, const Fingerprint &b);

} // namespace jjalg
