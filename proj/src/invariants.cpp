#include "jjalg/invariants.hpp"

#include <sstream>

#include "jjalg/structure.hpp"

namespace jjalg {

DerivationSpace derivation_space(const Algebra &a) {
  const std::size_t n = a.dim();
  const Field &f = a.field();
  // Unknown D[r][c] lives at column r * n + c.
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  // For commutative algebras the (j, i) equations repeat the (i, j) ones.
  const bool symmetric = is_commutative(a).commutative;
  Matrix sys(f, n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = symmetric ? i : 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = (i * n + j) * n + k;
        // D(e_i e_j)_k = sum_l c_ij^l D[k][l]
        for (std::size_t l = 0; l < n; ++l)
          sys(row, var(k, l)) += a.constant(i, j, l);
        // (D e_i) e_j = sum_r D[r][i] c_rj^k ;  e_i (D e_j) = sum_r D[r][j] c_ir^k
        for (std::size_t r = 0; r < n; ++r) {
          sys(row, var(r, i)) -= a.constant(r, j, k);
          sys(row, var(r, j)) -= a.constant(i, r, k);
        }
      }
  for (std::size_t r = 0; r < sys.rows(); ++r)
    for (std::size_t c = 0; c < sys.cols(); ++c)
      f.reduce(sys(r, c));

  Subspace ker = kernel(sys);
  DerivationSpace out;
  out.dim = ker.dim();
  for (const auto &v : ker.basis_vectors()) {
    Matrix d(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        d(r, c) = v[var(r, c)];
    out.basis.push_back(std::move(d));
  }
  return out;
}

Fingerprint fingerprint(const Algebra &a) {
  Fingerprint fp;
  fp.dim = a.dim();
  auto chain = power_chain(a);
  for (const auto &s : chain.powers)
    fp.dims_power_chain.push_back(s.dim());
  fp.nilpotency_class = chain.vanished_at;
  auto ni = nilindex(a);
  if (ni.found)
    fp.nilindex = ni.index;
  fp.dim_annihilator = annihilator(a).dim();
  fp.dim_derivations = derivation_space(a).dim;
  fp.associative = is_associative(a).holds;
  return fp;
}

std::string to_string(const Fingerprint &fp) {
  std::ostringstream os;
  os << "dim=" << fp.dim << " A^k=(";
  for (std::size_t i = 0; i < fp.dims_power_chain.size(); ++i)
    os << (i ? "," : "") << fp.dims_power_chain[i];
  os << ") class=";
  if (fp.nilpotency_class)
    os << *fp.nilpotency_class;
  else
    os << "none";
  os << " nil=";
  if (fp.nilindex)
    os << *fp.nilindex;
  else
    os << "none";
  os << " ann=" << fp.dim_annihilator << " der=" << fp.dim_derivations
     << " assoc=" << (fp.associative ? 1 : 0);
  return os.str();
}

std::vector<std::string> fingerprint_diff(const Fingerprint &a, const Fingerprint &b) {
  std::vector<std::string> out;
  if (a.dim != b.dim)
    out.push_back("dim");
  if (a.dims_power_chain != b.dims_power_chain)
    out.push_back("dims_power_chain");
  if (a.nilpotency_class != b.nilpotency_class)
    out.push_back("nilpotency_class");
  if (a.nilindex != b.nilindex)
    out.push_back("nilindex");
  if (a.dim_annihilator != b.dim_annihilator)
    out.push_back("dim_annihilator");
  if (a.dim_derivations != b.dim_derivations)
    out.push_back("dim_derivations");
  if (a.associative != b.associative)
    out.push_back("associative");
  return out;
}

} // namespace jjalg
