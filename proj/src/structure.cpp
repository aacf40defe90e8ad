#include "jjalg/structure.hpp"

#include <random>
#include <stdexcept>

namespace jjalg {

IdentityCheck is_jacobi(const Algebra &a) { return check_identity(a, Identity::jacobi()); }

IdentityCheck is_jacobi_direct(const Algebra &a) {
  return check_multilinear_on_basis(a, Identity::jacobi());
}

IdentityCheck is_associative(const Algebra &a) {
  return check_multilinear_on_basis(a, Identity::associativity());
}

IdentityCheck is_jordan(const Algebra &a) { return check_identity(a, Identity::jordan()); }

PowerAssociativityCheck is_power_associative(const Algebra &a) {
  PowerAssociativityCheck out;
  out.max_degree = a.dim() + 1;
  for (std::size_t total = 2; total <= out.max_degree; ++total)
    for (std::size_t i = 1; i < total; ++i) {
      const std::size_t j = total - i;
      // x * x^j = x^{j+1} holds by definition of right-normed powers.
      if (i == 1)
        continue;
      auto r = check_identity(a, Identity::power_associativity(i, j));
      if (!r.holds) {
        out.holds = false;
        out.failing = std::make_pair(i, j);
        out.detail = std::move(r);
        return out;
      }
    }
  return out;
}

Vector principal_power(const Algebra &a, std::span<const Scalar> x, std::size_t k) {
  if (k == 0)
    throw std::invalid_argument("principal powers start at 1");
  if (x.size() != a.dim())
    throw std::invalid_argument("principal_power: vector length mismatch");
  Vector p(x.begin(), x.end());
  for (std::size_t i = 1; i < k; ++i)
    p = a.product(x, p);
  return p;
}

Subspace subspace_product(const Algebra &a, const Subspace &u, const Subspace &v) {
  if (u.ambient_dim() != a.dim() || v.ambient_dim() != a.dim())
    throw std::invalid_argument("subspace_product: ambient dimension mismatch");
  std::vector<Vector> products;
  auto ub = u.basis_vectors(), vb = v.basis_vectors();
  for (const auto &x : ub)
    for (const auto &y : vb)
      products.push_back(a.product(x, y));
  return Subspace::span(a.field(), a.dim(), products);
}

PowerChain power_chain(const Algebra &a) {
  const std::size_t n = a.dim();
  const std::size_t bound = 2 * n + 2;
  PowerChain chain;
  chain.powers.push_back(Subspace::full(a.field(), n));
  if (n == 0) {
    chain.vanished_at = 1;
    return chain;
  }
  for (std::size_t k = 2; k <= bound; ++k) {
    Subspace sum = Subspace::zero(a.field(), n);
    for (std::size_t i = 1; i < k; ++i)
      sum = subspace_sum(sum, subspace_product(a, chain.powers[i - 1], chain.powers[k - i - 1]));
    chain.powers.push_back(std::move(sum));
    if (chain.powers.back().dim() == 0) {
      chain.vanished_at = k;
      return chain;
    }
  }
  const auto &p = chain.powers;
  chain.stabilized = p[p.size() - 1] == p[p.size() - 2];
  return chain;
}

Nilpotency is_nilpotent(const Algebra &a) {
  auto chain = power_chain(a);
  return {chain.vanished_at.has_value(), chain.vanished_at};
}

std::vector<Subspace> derived_series(const Algebra &a) {
  std::vector<Subspace> series{Subspace::full(a.field(), a.dim())};
  while (series.back().dim() > 0) {
    Subspace next = subspace_product(a, series.back(), series.back());
    if (next == series.back())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const Algebra &a) { return derived_series(a).back().dim() == 0; }

namespace {

std::optional<Vector> find_power_witness(const Algebra &a, std::size_t power,
                                         std::uint64_t seed) {
  const std::size_t n = a.dim();
  auto good = [&](const Vector &x) { return !is_zero(principal_power(a, x, power)); };

  for (std::size_t i = 0; i < n; ++i) {
    Vector e = a.basis_vector(i);
    if (good(e))
      return e;
  }
  if (n < 20) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Vector x(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i))
          x[i] = 1;
      if (good(x))
        return x;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int draw = 0; draw < 1000; ++draw) {
    Vector x(n);
    for (auto &s : x)
      s = a.field().from_int(dist(rng));
    if (good(x))
      return x;
  }
  return std::nullopt;
}

} // namespace

Nilindex nilindex(const Algebra &a, std::uint64_t seed) {
  const std::size_t n = a.dim();
  Nilindex out;
  if (n == 0) {
    out.found = true;
    out.index = 1;
    return out;
  }
  for (std::size_t m = 2; m <= n + 2; ++m) {
    if (!check_identity(a, Identity::nil(m)).holds)
      continue;
    auto w = find_power_witness(a, m - 1, seed);
    if (!w)
      throw std::runtime_error("nilindex: no element with nonzero x^" + std::to_string(m - 1) +
                               " found by the witness search");
    out.found = true;
    out.index = m;
    out.witness = std::move(*w);
    return out;
  }
  return out;
}

Subspace annihilator(const Algebra &a) {
  const std::size_t n = a.dim();
  // Rows: coordinates of z*e_i and e_i*z as linear forms in z.
  Matrix m(a.field(), 2 * n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t z = 0; z < n; ++z) {
        m(i * n + k, z) = a.constant(z, i, k);
        m(n * n + i * n + k, z) = a.constant(i, z, k);
      }
  return kernel(m);
}

} // namespace jjalg
