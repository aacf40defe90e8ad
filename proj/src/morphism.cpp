#include "jjalg/morphism.hpp"

#include <stdexcept>

namespace jjalg {

HomomorphismCheck is_homomorphism(const LinearMap &f, const Algebra &a, const Algebra &b) {
  if (f.domain_dim() != a.dim() || f.codomain_dim() != b.dim())
    throw std::invalid_argument("linear map shape does not match the algebras");
  if (!(a.field() == b.field()) || !(f.matrix().field() == a.field()))
    throw std::invalid_argument("homomorphism check across different fields");
  const std::size_t n = a.dim();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(f.matrix().column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = f(a.basis_product(i, j));
      Vector rhs = b.product(images[i], images[j]);
      if (lhs != rhs)
        return {false, std::make_pair(i, j)};
    }
  return {};
}

IsomorphismCheck is_isomorphism(const LinearMap &f, const Algebra &a, const Algebra &b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("isomorphism check between algebras of different dimension");
  IsomorphismCheck out;
  auto hom = is_homomorphism(f, a, b);
  out.homomorphism = hom.holds;
  out.witness = hom.witness;
  out.determinant = determinant(f.matrix());
  out.invertible = !is_zero(out.determinant);
  return out;
}

} // namespace jjalg
