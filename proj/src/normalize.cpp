#include "jjalg/normalize.hpp"

#include <optional>
#include <random>

#include "jjalg/structure.hpp"

namespace jjalg {

Algebra na5_normal_form(Field field) {
  Algebra::Builder b(field, 5);
  b.term(0, 0, 1, 1).term(0, 3, 4, 1).term(0, 4, 2, Scalar(-1, 2)).term(1, 3, 2, 1);
  return b.build();
}

namespace {

using Kind = NormalizationError::Kind;

Vector combine(const Field &f, std::initializer_list<std::pair<Scalar, const Vector *>> parts) {
  Vector out(parts.begin()->second->size());
  for (const auto &[c, v] : parts)
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += c * (*v)[i];
  for (auto &s : out)
    f.reduce(s);
  return out;
}

/// Candidate x vectors in a fixed order: basis vectors, then 0/+-1
/// combinations, then seeded random small-integer vectors.
std::vector<Vector> x_candidates(const Algebra &a, std::uint64_t seed) {
  const std::size_t n = a.dim();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(a.basis_vector(i));
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i)
    total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    Vector x(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3)
      x[i] = a.field().from_int(static_cast<long>(c % 3) - 1);
    out.push_back(std::move(x));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-7, 7);
  for (int draw = 0; draw < 200; ++draw) {
    Vector x(n);
    for (auto &s : x)
      s = a.field().from_int(dist(rng));
    out.push_back(std::move(x));
  }
  return out;
}

} // namespace

Dim5Normalization normalize_dim5(const Algebra &a, std::uint64_t seed) {
  if (a.dim() != 5)
    throw NormalizationError(Kind::WrongShape, "normalize_dim5 needs a 5-dimensional algebra");
  if (!is_commutative(a).commutative)
    throw NormalizationError(Kind::WrongShape, "algebra is not commutative");
  auto chain = power_chain(a);
  if (chain.powers.size() < 3 || chain.powers[2].dim() == 0)
    throw NormalizationError(Kind::CubeVanishes,
                             "A^3 = 0: the algebra is associative, no normal form to compute");

  const Field &f = a.field();
  const Scalar half = f.from(Scalar(1, 2));

  for (const auto &x : x_candidates(a, seed)) {
    Vector x2 = a.product(x, x);
    if (is_zero(x2))
      continue;
    for (std::size_t yi = 0; yi < a.dim(); ++yi) {
      Vector y = a.basis_vector(yi);
      Vector yx2 = a.product(y, x2);
      if (is_zero(yx2))
        continue;
      Vector yx = a.product(y, x);
      Matrix frame = Matrix::from_columns(f, 5, {y, x, yx2, x2, yx});
      if (rank(frame) != 5)
        continue;

      Matrix a2 = Matrix::from_columns(f, 5, {yx2, x2, yx});
      auto coeffs = solve_linear(a2, a.product(y, y));
      if (!coeffs)
        throw NormalizationError(Kind::WrongShape,
                                 "y^2 is not in span{y x^2, x^2, y x}; input is not a "
                                 "Jacobi-Jordan algebra of the expected shape");
      Dim5NormalizationData data;
      data.alpha = (*coeffs)[0];
      data.beta = (*coeffs)[1];
      data.gamma = (*coeffs)[2];
      Scalar lhs = 4 * data.beta, rhs = -data.gamma * data.gamma;
      f.reduce(lhs);
      f.reduce(rhs);
      if (lhs != rhs)
        throw NormalizationError(Kind::ConstraintViolated,
                                 "4 beta != -gamma^2 (beta = " + data.beta.get_str() +
                                     ", gamma = " + data.gamma.get_str() + ")");

      Scalar ha = -half * data.alpha, hg = -half * data.gamma;
      f.reduce(ha);
      f.reduce(hg);
      Vector e4 = combine(f, {{Scalar(1), &y}, {ha, &x2}, {hg, &x}});
      Vector e5 = combine(f, {{Scalar(1), &yx}, {hg, &x2}});
      Matrix p = Matrix::from_columns(f, 5, {x, x2, yx2, e4, e5});
      if (rank(p) != 5)
        throw NormalizationError(Kind::NotNormalForm, "constructed vectors are not a basis");

      Algebra normalized = conjugate(a, p);
      if (!(normalized == na5_normal_form(f)))
        throw NormalizationError(Kind::NotNormalForm,
                                 "new basis does not produce the normal-form products");
      data.x = x;
      data.y = std::move(y);
      data.new_basis = LinearMap(std::move(p));
      return {std::move(data), std::move(normalized)};
    }
  }
  throw NormalizationError(Kind::NoGoodPair, "no x, y with y x^2 != 0 found");
}

} // namespace jjalg
