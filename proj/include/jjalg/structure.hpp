#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "jjalg/algebra.hpp"
#include "jjalg/identity.hpp"
#include "jjalg/matrix.hpp"

namespace jjalg {

// Identity-based property checks. All go through check_identity except
// is_jacobi_direct, which evaluates the trilinear Jacobi form on basis triples.
IdentityCheck is_jacobi(const Algebra &a);
IdentityCheck is_jacobi_direct(const Algebra &a);
IdentityCheck is_associative(const Algebra &a);
IdentityCheck is_jordan(const Algebra &a);

struct PowerAssociativityCheck {
  bool holds = true;
  std::size_t max_degree = 0; // checked x^i * x^j = x^{i+j} for all i + j <= max_degree
  std::optional<std::pair<std::size_t, std::size_t>> failing;
  IdentityCheck detail;
};

/// Bounded check of x^i * x^j = x^{i+j} for i, j >= 1 and i + j <= dim + 1.
/// This verifies power-associativity up to that degree only.
PowerAssociativityCheck is_power_associative(const Algebra &a);

/// x^1 = x, x^{k+1} = x * x^k.
Vector principal_power(const Algebra &a, std::span<const Scalar> x, std::size_t k);

/// span{ u_i * v_j } over basis vectors of u and v.
Subspace subspace_product(const Algebra &a, const Subspace &u, const Subspace &v);

struct PowerChain {
  std::vector<Subspace> powers; // powers[k - 1] = A^k
  bool stabilized = false;      // last two entries equal and nonzero
  std::optional<std::size_t> vanished_at;
};

/// A^1 = A, A^k = sum_{i+j=k} A^i A^j, computed until A^k = 0 or k = 2n + 2.
PowerChain power_chain(const Algebra &a);

struct Nilpotency {
  bool nilpotent = false;
  std::optional<std::size_t> nilpotency_class; // least k with A^k = 0
};
Nilpotency is_nilpotent(const Algebra &a);

/// A^(0) = A, A^(k+1) = A^(k) A^(k); stops at zero or when the series repeats.
std::vector<Subspace> derived_series(const Algebra &a);
bool is_solvable(const Algebra &a);

struct Nilindex {
  bool found = false;
  std::size_t index = 0; // least m with x^m = 0 identically
  Vector witness;        // witness^(m-1) != 0
};

/// Least m in [2, dim + 2] with x^m = 0 as an identity, plus a concrete
/// element with nonzero (m-1)-st power. `found` is false when no such m exists
/// up to the bound. The zero-dimensional algebra has nilindex 1.
Nilindex nilindex(const Algebra &a, std::uint64_t seed = 0x5eed);

/// { z : z * e_i = e_i * z = 0 for all i }.
Subspace annihilator(const Algebra &a);

} // namespace jjalg
