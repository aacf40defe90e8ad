#include "jjalg/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jjalg {

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector> &rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = field.from(rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows,
                            const std::vector<Vector> &columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = field.from(columns[c][r]);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!jjalg::is_zero(v[c]))
        acc += (*this)(r, c) * v[c];
    field_.reduce(acc);
    out[r] = acc;
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto &s : data_)
    if (!jjalg::is_zero(s))
      return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? " " : "") << (*this)(r, c).get_str();
    os << "]\n";
  }
  return os.str();
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product dimension mismatch");
  if (!(a.field() == b.field()))
    throw std::invalid_argument("matrix product across different fields");
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k)))
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  if (!a.field().is_rational())
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j)
        a.field().reduce(out(i, j));
  return out;
}

RrefResult rref(const Matrix &m) {
  // Rows are inserted one at a time into a reduced basis, so rows that turn
  // out dependent never take part in later elimination steps.
  const Field &f = m.field();
  const std::size_t cols = m.cols();
  std::vector<Vector> basis;
  std::vector<std::size_t> pivots;
  Vector row(cols);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool any = false;
    for (std::size_t c = 0; c < cols; ++c) {
      row[c] = m(r, c);
      any = any || !is_zero(row[c]);
    }
    if (!any)
      continue;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Scalar factor = row[pivots[b]];
      if (is_zero(factor))
        continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (is_zero(basis[b][c]))
          continue;
        row[c] -= factor * basis[b][c];
        f.reduce(row[c]);
      }
    }
    std::size_t lead = 0;
    while (lead < cols && is_zero(row[lead]))
      ++lead;
    if (lead == cols)
      continue;
    const Scalar pinv = f.inv(row[lead]);
    for (std::size_t c = lead; c < cols; ++c) {
      row[c] *= pinv;
      f.reduce(row[c]);
    }
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Scalar factor = basis[b][lead];
      if (is_zero(factor))
        continue;
      for (std::size_t c = lead; c < cols; ++c) {
        if (is_zero(row[c]))
          continue;
        basis[b][c] -= factor * row[c];
        f.reduce(basis[b][c]);
      }
    }
    basis.push_back(row);
    pivots.push_back(lead);
  }
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return pivots[x] < pivots[y]; });
  Matrix out(f, m.rows(), cols);
  std::vector<std::size_t> sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t c = 0; c < cols; ++c)
      out(i, c) = std::move(basis[order[i]][c]);
    sorted.push_back(pivots[order[i]]);
  }
  return {std::move(out), sorted.size(), std::move(sorted)};
}

std::size_t rank(const Matrix &m) { return rref(m).rank; }

Scalar determinant(const Matrix &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  const Field &f = m.field();
  Matrix a = m;
  Scalar det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && is_zero(a(sel, col)))
      ++sel;
    if (sel == n)
      return Scalar(0);
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(a(sel, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    f.reduce(det);
    Scalar pinv = f.inv(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col)))
        continue;
      Scalar factor = a(r, col) * pinv;
      f.reduce(factor);
      for (std::size_t c = col; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
        f.reduce(a(r, c));
      }
    }
  }
  f.reduce(det);
  return det;
}

Matrix inverse(const Matrix &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1)
    throw std::domain_error("matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv(r, c) = red.matrix(r, n + c);
  return inv;
}

std::optional<Vector> solve_linear(const Matrix &m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows())
    throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      aug(r, c) = m(r, c);
    aug(r, m.cols()) = m.field().from(rhs[r]);
  }
  auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols())
    return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < red.rank; ++i)
    x[red.pivots[i]] = red.matrix(i, m.cols());
  return x;
}

// ---------------------------------------------------------------------------

Subspace Subspace::zero(Field field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim));
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  return Subspace(Matrix::identity(field, ambient_dim));
}

Subspace Subspace::row_space(const Matrix &m) {
  auto red = rref(m);
  Matrix basis(m.field(), red.rank, m.cols());
  for (std::size_t r = 0; r < red.rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      basis(r, c) = red.matrix(r, c);
  return Subspace(std::move(basis));
}

Subspace Subspace::span(Field field, std::size_t ambient_dim,
                        const std::vector<Vector> &vectors) {
  Matrix m(field, vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim)
      throw std::invalid_argument("span: vector length mismatch");
    for (std::size_t c = 0; c < ambient_dim; ++c)
      m(r, c) = field.from(vectors[r][c]);
  }
  return row_space(m);
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim())
    throw std::invalid_argument("subspace membership: length mismatch");
  // Reduce v against the RREF rows using their pivots.
  Vector w(v.begin(), v.end());
  for (auto &s : w)
    field().reduce(s);
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t pivot = 0;
    while (is_zero(basis_(r, pivot)))
      ++pivot;
    if (is_zero(w[pivot]))
      continue;
    Scalar factor = w[pivot];
    for (std::size_t c = pivot; c < ambient_dim(); ++c) {
      w[c] -= factor * basis_(r, c);
      field().reduce(w[c]);
    }
  }
  return jjalg::is_zero(w);
}

bool Subspace::contains(const Subspace &other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r)))
      return false;
  return true;
}

Subspace kernel(const Matrix &m) {
  auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) {
      v[red.pivots[i]] = -red.matrix(i, free);
      m.field().reduce(v[red.pivots[i]]);
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), basis);
}

Subspace subspace_sum(const Subspace &u, const Subspace &v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("subspace sum: ambient dimension mismatch");
  if (!(u.field() == v.field()))
    throw std::invalid_argument("subspace sum: field mismatch");
  auto vectors = u.basis_vectors();
  for (auto &b : v.basis_vectors())
    vectors.push_back(std::move(b));
  return Subspace::span(u.field(), u.ambient_dim(), vectors);
}

} // namespace jjalg
