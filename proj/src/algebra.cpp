#include "jjalg/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace jjalg {

namespace {

std::vector<std::string> default_labels(std::size_t n, std::size_t offset = 0) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back("e" + std::to_string(i + 1 + offset));
  return labels;
}

bool is_default_label(const std::string &label, std::size_t index) {
  return label == "e" + std::to_string(index + 1);
}

} // namespace

Algebra::Algebra(Field field, std::size_t n, std::vector<Scalar> constants,
                 std::vector<std::string> labels)
    : field_(field), n_(n), c_(std::move(constants)), labels_(std::move(labels)) {
  if (c_.size() != n_ * n_ * n_)
    throw std::invalid_argument("structure tensor has " + std::to_string(c_.size()) +
                                " entries, expected " + std::to_string(n_ * n_ * n_));
  if (labels_.empty())
    labels_ = default_labels(n_);
  if (labels_.size() != n_)
    throw std::invalid_argument("label count does not match dimension");
  for (auto &s : c_)
    s = field_.from(s);
  index_nonzeros();
}

Algebra Algebra::zero(Field field, std::size_t n) {
  return Algebra(field, n, std::vector<Scalar>(n * n * n));
}

void Algebra::index_nonzeros() {
  nonzero_.assign(n_ * n_, {});
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (!jjalg::is_zero(constant(i, j, k)))
          nonzero_[i * n_ + j].push_back({k, constant(i, j, k)});
}

Vector Algebra::basis_vector(std::size_t i) const {
  Vector v(n_);
  v.at(i) = 1;
  return v;
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vector out(n_);
  for (const auto &e : nonzero_.at(i * n_ + j))
    out[e.k] = e.value;
  return out;
}

Vector Algebra::product(std::span<const Scalar> u, std::span<const Scalar> v) const {
  if (u.size() != n_ || v.size() != n_)
    throw std::invalid_argument("product: vector length does not match dimension " +
                                std::to_string(n_));
  Vector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (jjalg::is_zero(u[i]))
      continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (jjalg::is_zero(v[j]))
        continue;
      const auto &entries = nonzero_[i * n_ + j];
      if (entries.empty())
        continue;
      Scalar uv = u[i] * v[j];
      for (const auto &e : entries)
        out[e.k] += uv * e.value;
    }
  }
  if (!field_.is_rational())
    for (auto &s : out)
      field_.reduce(s);
  return out;
}

bool Algebra::is_zero_product() const {
  for (const auto &entries : nonzero_)
    if (!entries.empty())
      return false;
  return true;
}

// ---------------------------------------------------------------------------

void Algebra::Builder::assign(std::size_t i, std::size_t j, const Vector &value) {
  for (std::size_t k = 0; k < n_; ++k)
    c_[(i * n_ + j) * n_ + k] = field_.from(value[k]);
  declared_[i * n_ + j] = true;
}

Algebra::Builder &Algebra::Builder::set(std::size_t i, std::size_t j, const Vector &value,
                                        bool symmetric) {
  if (i >= n_ || j >= n_)
    throw std::out_of_range("basis index out of range");
  if (value.size() != n_)
    throw std::invalid_argument("product value has wrong length");
  auto conflicts = [&](std::size_t a, std::size_t b) {
    if (!declared_[a * n_ + b])
      return false;
    for (std::size_t k = 0; k < n_; ++k)
      if (c_[(a * n_ + b) * n_ + k] != field_.from(value[k]))
        return true;
    return false;
  };
  if (conflicts(i, j) || (symmetric && conflicts(j, i)))
    throw std::invalid_argument("conflicting declarations for e" + std::to_string(i + 1) +
                                "*e" + std::to_string(j + 1));
  assign(i, j, value);
  if (symmetric)
    assign(j, i, value);
  return *this;
}

Algebra::Builder &Algebra::Builder::term(std::size_t i, std::size_t j, std::size_t k,
                                         const Scalar &coeff, bool symmetric) {
  if (i >= n_ || j >= n_ || k >= n_)
    throw std::out_of_range("basis index out of range");
  auto add = [&](std::size_t a, std::size_t b) {
    Scalar &slot = c_[(a * n_ + b) * n_ + k];
    slot += coeff;
    field_.reduce(slot);
    declared_[a * n_ + b] = true;
  };
  add(i, j);
  if (symmetric && i != j)
    add(j, i);
  return *this;
}

Algebra::Builder &Algebra::Builder::labels(std::vector<std::string> labels) {
  labels_ = std::move(labels);
  return *this;
}

Algebra Algebra::Builder::build() const { return Algebra(field_, n_, c_, labels_); }

// ---------------------------------------------------------------------------

CommutativityResult is_commutative(const Algebra &a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.constant(i, j, k) != a.constant(j, i, k))
          return {false, std::make_pair(i, j)};
  return {};
}

Algebra direct_sum(const Algebra &a, const Algebra &b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("direct sum of algebras over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<Scalar> c(n * n * n);
  auto at = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k)
        c[at(i, j, k)] = a.constant(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        c[at(na + i, na + j, na + k)] = b.constant(i, j, k);
  std::vector<std::string> labels = a.labels();
  for (std::size_t i = 0; i < nb; ++i)
    labels.push_back(is_default_label(b.labels()[i], i) ? "e" + std::to_string(na + i + 1)
                                                         : b.labels()[i]);
  return Algebra(a.field(), n, std::move(c), std::move(labels));
}

Algebra conjugate(const Algebra &a, const Matrix &p) {
  const std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n)
    throw std::invalid_argument("conjugate: matrix shape does not match algebra");
  if (!(p.field() == a.field()))
    throw std::invalid_argument("conjugate: field mismatch");
  Matrix pinv = inverse(p);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i)
    cols.push_back(p.column(i));
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector w = pinv.apply(a.product(cols[i], cols[j]));
      for (std::size_t k = 0; k < n; ++k)
        c[(i * n + j) * n + k] = w[k];
    }
  return Algebra(a.field(), n, std::move(c));
}

Algebra permute_basis(const Algebra &a, const std::vector<std::size_t> &order) {
  const std::size_t n = a.dim();
  if (order.size() != n)
    throw std::invalid_argument("permutation length mismatch");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || inv[order[i]] != n)
      throw std::invalid_argument("not a permutation");
    inv[order[i]] = i;
  }
  std::vector<Scalar> c(n * n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = a.labels()[order[i]];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        c[(i * n + j) * n + inv[k]] = a.constant(order[i], order[j], k);
  }
  return Algebra(a.field(), n, std::move(c), std::move(labels));
}

Vector associator(const Algebra &a, std::size_t i, std::size_t j, std::size_t k) {
  Vector ei = a.basis_vector(i), ej = a.basis_vector(j), ek = a.basis_vector(k);
  Vector left = a.product(a.product(ei, ej), ek);
  Vector right = a.product(ei, a.product(ej, ek));
  for (std::size_t r = 0; r < a.dim(); ++r) {
    left[r] -= right[r];
    a.field().reduce(left[r]);
  }
  return left;
}

std::string format_vector(std::span<const Scalar> v, const std::vector<std::string> &labels) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i]))
      continue;
    std::string name = i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
    Scalar c = v[i];
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0)
        c = -c;
    }
    if (c != 1)
      os << c.get_str() << " ";
    os << name;
    first = false;
  }
  if (first)
    os << "0";
  return os.str();
}

} // namespace jjalg
