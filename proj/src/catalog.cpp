#include "jjalg/catalog.hpp"

#include <stdexcept>

namespace jjalg::catalog {

namespace {

struct Product {
  std::size_t i, j; // 1-based
  std::vector<std::pair<std::size_t, Scalar>> value;
};

Algebra table(std::size_t n, const std::vector<Product> &products,
              Field field = Field::rationals()) {
  Algebra::Builder b(field, n);
  for (const auto &p : products) {
    Vector v(n);
    for (const auto &[k, c] : p.value)
      v.at(k - 1) += c;
    b.set(p.i - 1, p.j - 1, v, /*symmetric=*/true);
  }
  return b.build();
}

const Scalar half(1, 2);
const Scalar minus_half(-1, 2);

Expected zero_algebra() { return {true, true, true, 2, false}; }
Expected assoc(bool decomposable) { return {true, true, true, 3, decomposable}; }
Expected non_assoc() { return {true, false, false, 3, false}; }

std::vector<Entry> build_registry() {
  std::vector<Entry> r;
  const std::string t3 = "classification table, dimension <= 3";
  const std::string t4 = "classification table, dimension 4";
  const std::string t5i = "classification table, dimension 5, indecomposable associative";
  const std::string t5d = "classification table, dimension 5, decomposable associative";
  const std::string t5n = "dimension 5, unique non-associative algebra";
  const std::string t6 = "classification table, dimension 6, non-associative";

  auto add = [&](std::string name, Algebra a, Expected e, std::string source,
                 std::vector<std::string> summands = {}, std::optional<std::string> ideal = {}) {
    r.push_back({std::move(name), std::move(a), e, std::move(source), std::move(ideal),
                 std::move(summands), true});
  };
  const std::string z = "A_{0,1}";

  // dimension <= 3
  add("A_{0,1}", table(1, {}), zero_algebra(), t3);
  add("A_{0,1}+A_{0,1}", table(2, {}), {true, true, true, 2, true}, t3, {z, z});
  add("A_{1,2}", table(2, {{1, 1, {{2, 1}}}}), assoc(false), t3);
  add("A_{0,1}+A_{0,1}+A_{0,1}", table(3, {}), {true, true, true, 2, true}, t3, {z, z, z});
  add("A_{1,2}+A_{0,1}", table(3, {{1, 1, {{2, 1}}}}), assoc(true), t3, {"A_{1,2}", z});
  add("A_{1,3}", table(3, {{1, 1, {{2, 1}}}, {3, 3, {{2, 1}}}}), assoc(false), t3);

  // dimension 4
  add("A_{0,1}^4", table(4, {}), {true, true, true, 2, true}, t4, {z, z, z, z});
  add("A_{1,2}+A_{0,1}^2", table(4, {{1, 1, {{2, 1}}}}), assoc(true), t4, {"A_{1,2}", z, z});
  add("A_{1,3}+A_{0,1}", table(4, {{1, 1, {{2, 1}}}, {3, 3, {{2, 1}}}}), assoc(true), t4,
      {"A_{1,3}", z});
  add("A_{1,2}+A_{1,2}", table(4, {{1, 1, {{2, 1}}}, {3, 3, {{4, 1}}}}), assoc(true), t4,
      {"A_{1,2}", "A_{1,2}"});
  add("A_{1,4}", table(4, {{1, 1, {{2, 1}}}, {1, 3, {{4, 1}}}}), assoc(false), t4);
  add("A_{2,4}", table(4, {{1, 1, {{2, 1}}}, {3, 4, {{2, 1}}}}), assoc(false), t4);

  // dimension 5
  add("A_{NA,5}",
      table(5, {{1, 1, {{2, 1}}}, {1, 4, {{5, 1}}}, {1, 5, {{3, minus_half}}}, {2, 4, {{3, 1}}}}),
      non_assoc(), t5n);
  add("A_{1,5}", table(5, {{1, 1, {{2, 1}}}, {1, 3, {{5, 1}}}, {3, 3, {{4, 1}}}}), assoc(false),
      t5i, {}, "(x,y)^3");
  add("A_{2,5}", table(5, {{1, 1, {{2, 1}}}, {1, 4, {{5, 1}}}, {3, 3, {{5, 1}}}}), assoc(false),
      t5i, {}, "(xy,yz,z^2,y^2-xz,x^3)");
  add("A_{3,5}",
      table(5, {{1, 1, {{2, 1}}},
                {1, 4, {{5, 1}}},
                {3, 3, {{2, -1}, {5, 1}}},
                {3, 4, {{5, 1}}}}),
      assoc(false), t5i, {}, "(xy,z^2,xz-yz,x^2+y^2-xz)");
  add("A_{4,5}", table(5, {{1, 1, {{2, 1}}}, {3, 3, {{4, 1}}}, {5, 5, {{2, -1}, {4, 1}}}}),
      assoc(false), t5i, {}, "(xy,xz,yz,x^2+y^2-z^2)");
  add("A_{5,5}", table(5, {{1, 1, {{2, 1}}}, {3, 3, {{4, 1}}}, {3, 5, {{2, -1}, {4, 1}}}}),
      assoc(false), t5i, {}, "(x^2,xy,yz,xz+y^2-z^2)");
  add("A_{6,5}", table(5, {{1, 1, {{2, 1}}}, {1, 3, {{5, 1}}}, {1, 4, {{2, half}}}}),
      assoc(false), t5i, {}, "(x^2,xy,y^2,z^2)");
  add("A_{7,5}", table(5, {{1, 1, {{2, 1}}}, {3, 3, {{2, -1}}}, {4, 5, {{2, half}}}}),
      assoc(false), t5i, {}, "(x^2,y^2,z^2,w^2,xy-zw,xz,xw,yz,yw)");

  add("A_{0,1}^5", table(5, {}), {true, true, true, 2, true}, t5d, {z, z, z, z, z},
      "(x,y,z,w,v)^2");
  add("A_{1,2}+A_{0,1}^3", table(5, {{1, 1, {{2, 1}}}}), assoc(true), t5d,
      {"A_{1,2}", z, z, z}, "(x^2,y^2,z^2,xy,xz,xw,yz,yw,zw,w^3)");
  add("A_{1,3}+A_{0,1}^2", table(5, {{1, 1, {{2, 1}}}, {3, 3, {{2, 1}}}}), assoc(true), t5d,
      {"A_{1,3}", z, z}, "(x^2,y^2,z^2,w^2,xy,xz,xw,yz,yw)");
  add("A_{2,4}+A_{0,1}", table(5, {{1, 1, {{2, 1}}}, {3, 4, {{2, 1}}}}), assoc(true), t5d,
      {"A_{2,4}", z}, "(x^2,y^2+zw,z^2,w^2,xy,xz,xw,yz,yw)");
  add("A_{1,2}^2+A_{0,1}", table(5, {{1, 1, {{2, 1}}}, {3, 3, {{4, 1}}}}), assoc(true), t5d,
      {"A_{1,2}", "A_{1,2}", z}, "(x^2,xy,xz,yz,y^3,z^3)");
  add("A_{1,2}+A_{1,3}", table(5, {{1, 1, {{2, 1}}}, {3, 3, {{4, 1}}}, {5, 5, {{4, 1}}}}),
      assoc(true), t5d, {"A_{1,2}", "A_{1,3}"}, "(xy,xz,y^2,z^2,x^3)");
  add("A_{1,4}+A_{0,1}", table(5, {{1, 1, {{2, 1}}}, {1, 3, {{4, 1}}}}), assoc(true), t5d,
      {"A_{1,4}", z}, "(x^2,xy,xz,y^2,yz^2,z^3)");

  // dimension 6, non-associative
  add("A_{1,6}",
      table(6, {{1, 1, {{2, 1}}},
                {1, 3, {{5, 1}}},
                {1, 4, {{6, 1}}},
                {3, 3, {{4, 1}}},
                {3, 5, {{6, minus_half}}}}),
      non_assoc(), t6);
  for (int beta : {0, 1})
    for (int delta : {0, 1})
      add("A_{2,6}(" + std::to_string(beta) + "," + std::to_string(delta) + ")",
          build_A26(beta, delta), non_assoc(), t6);

  // auxiliary entries
  auto aux = [&](std::string name, Algebra a, Expected e, std::string source) {
    r.push_back({std::move(name), std::move(a), e, std::move(source), std::nullopt, {}, false});
  };
  aux("Suttles", suttles(), {false, false, false, 4, false},
      "commutative power-associative nilalgebra that is solvable but not nilpotent");
  aux("H_1", heisenberg(1), assoc(false), "commutative Heisenberg algebra, m = 1");
  aux("H_2", heisenberg(2), assoc(false), "commutative Heisenberg algebra, m = 2");
  return r;
}

} // namespace

Algebra build_A26(const Scalar &beta, const Scalar &delta, Field field) {
  return table(6,
               {{1, 1, {{2, 1}}},
                {1, 3, {{2, -beta}}},
                {1, 4, {{5, 1}}},
                {1, 5, {{6, minus_half}}},
                {2, 4, {{6, 1}}},
                {3, 3, {{6, delta}}},
                {3, 5, {{6, beta}}}},
               field);
}

Matrix phi_matrix(const Scalar &beta, Field field) {
  if (is_zero(beta))
    throw std::domain_error("phi(beta) needs beta != 0");
  const Scalar b = beta;
  return Matrix::from_rows(field, {{2 * b, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, -1, 0},
                                   {1, 0, 0, 1 / (2 * b * b), 0, 0},
                                   {half, 0, -1, 0, 0, 0},
                                   {0, 2 * b, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 1}});
}

LinearMap phi(const Scalar &beta, Field field) { return LinearMap(phi_matrix(beta, field)); }

Algebra heisenberg(std::size_t m, Field field) {
  if (m == 0)
    throw std::invalid_argument("heisenberg(m) needs m >= 1");
  const std::size_t n = 2 * m + 1;
  std::vector<Product> products;
  for (std::size_t i = 1; i <= m; ++i)
    products.push_back({i, m + i, {{n, 1}}});
  Algebra a = table(n, products, field);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i)
    labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i)
    labels.push_back("y" + std::to_string(i));
  labels.push_back("z");
  return Algebra(a.field(), n, a.constants(), labels);
}

Algebra suttles(Field field) {
  return table(5,
               {{1, 2, {{3, 1}}},
                {2, 4, {{3, 1}}},
                {1, 5, {{3, -1}}},
                {1, 3, {{4, 1}}},
                {2, 3, {{5, 1}}}},
               field);
}

const std::vector<Entry> &entries() {
  static const std::vector<Entry> registry = build_registry();
  return registry;
}

const Entry &get(std::string_view name) {
  for (const auto &e : entries())
    if (e.name == name)
      return e;
  throw std::out_of_range("unknown catalog entry '" + std::string(name) + "'");
}

std::vector<const Entry *> list(std::optional<std::size_t> dim, bool classification_only) {
  std::vector<const Entry *> out;
  for (const auto &e : entries()) {
    if (dim && e.dim() != *dim)
      continue;
    if (classification_only && !e.classification)
      continue;
    out.push_back(&e);
  }
  return out;
}

const std::string &ideal_spec(std::string_view name) {
  const Entry &e = get(name);
  if (!e.ideal_spec)
    throw std::out_of_range("catalog entry '" + e.name + "' has no ideal (not a dim-5 associative row)");
  return *e.ideal_spec;
}

} // namespace jjalg::catalog
