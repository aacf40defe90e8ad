#include "jjalg/brute_force.hpp"

#include <stdexcept>
#include <string>

namespace jjalg {

namespace {

void reduce_constants(const Algebra &alg, std::uint64_t p,
                      std::array<std::int32_t, gl::kMaxDim * gl::kMaxDim * gl::kMaxDim> &out) {
  if (!alg.field().is_rational() && alg.field().characteristic() != p)
    throw std::invalid_argument("algebra is over " + alg.field().to_string() +
                                ", cannot reduce mod " + std::to_string(p));
  const std::size_t n = alg.dim();
  const mpz_class mod(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < n * n * n; ++i) {
    const Scalar &c = alg.constants()[i];
    if (c.get_den() != 1)
      throw std::invalid_argument("brute-force oracle needs integer structure constants, got " +
                                  c.get_str());
    mpz_class r = c.get_num() % mod;
    if (r < 0)
      r += mod;
    out[i] = static_cast<std::int32_t>(r.get_si());
  }
}

} // namespace

gl::Problem make_gl_problem(const Algebra &a, const Algebra &b, std::uint64_t p) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("algebras have different dimensions");
  if (a.dim() < 1 || a.dim() > gl::kMaxDim)
    throw std::invalid_argument("brute-force enumeration is limited to dimension 1.." +
                                std::to_string(gl::kMaxDim));
  Field::prime(p); // validates p
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < a.dim() * a.dim(); ++e) {
    total *= p;
    if (total > 200'000'000ULL)
      throw std::invalid_argument("enumeration bound exceeded: p^(n^2) > 2e8");
  }
  gl::Problem prob;
  prob.n = static_cast<int>(a.dim());
  prob.p = static_cast<int>(p);
  reduce_constants(a, p, prob.a);
  reduce_constants(b, p, prob.b);
  return prob;
}

std::optional<LinearMap> brute_force_isomorphic(const Algebra &a, const Algebra &b,
                                                std::uint64_t p, gl::Kernel kernel) {
  gl::Problem prob = make_gl_problem(a, b, p);
  auto index = gl::scan_first(prob, kernel);
  if (!index)
    return std::nullopt;
  auto entries = gl::decode(prob, *index);
  const std::size_t n = a.dim();
  Matrix m(Field::prime(p), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = entries[r * n + c];
  return LinearMap(std::move(m));
}

} // namespace jjalg
