#include "qkcf/matrix.hpp"

#include "qkcf/error.hpp"

#include <string>

namespace qkcf {

namespace {

void require_same_shape(const Matrix &a, const Matrix &b, const char *op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch,
                std::string("matrix shape mismatch in ") + op);
}

} // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    m(k, k) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k)
    m(k, k) = d[k];
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns,
                            std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::column_vector(std::span<const Scalar> v) {
  Matrix m(v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r)
    m(r, 0) = v[r];
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix m = *this;
  for (auto &z : m.data_)
    z = z.conj();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto &z : data_)
    if (!z.is_zero())
      return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto &z : data_)
    if (!z.is_real())
      return false;
  return true;
}

Matrix &Matrix::operator+=(const Matrix &o) {
  require_same_shape(*this, o, "+");
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] += o.data_[k];
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &o) {
  require_same_shape(*this, o, "-");
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] -= o.data_[k];
  return *this;
}

Matrix &Matrix::operator*=(const Scalar &s) {
  for (auto &z : data_)
    z *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto &z : m.data_)
    z = -z;
  return m;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix p(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar &x = a(r, k);
      if (x.is_zero())
        continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (!b(k, c).is_zero())
          p(r, c) += x * b(k, c);
    }
  return p;
}

Vector operator*(const Matrix &a, std::span<const Scalar> v) {
  if (a.cols() != v.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!v[k].is_zero() && !a(r, k).is_zero())
        out[r] += a(r, k) * v[k];
  return out;
}

std::ostream &operator<<(std::ostream &os, const Matrix &m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

Matrix hstack(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c)
      m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

Matrix vstack(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
      m(a.rows() + r, c) = b(r, c);
  }
  return m;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto &z : v)
    if (!z.is_zero())
      return false;
  return true;
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Vector out(a.begin(), a.end());
  for (std::size_t k = 0; k < b.size(); ++k)
    out[k] += b[k];
  return out;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Vector out(a.begin(), a.end());
  for (std::size_t k = 0; k < b.size(); ++k)
    out[k] -= b[k];
  return out;
}

Vector scale(const Scalar &s, std::span<const Scalar> v) {
  Vector out(v.begin(), v.end());
  for (auto &z : out)
    z *= s;
  return out;
}

Vector conj(std::span<const Scalar> v) {
  Vector out;
  out.reserve(v.size());
  for (const auto &z : v)
    out.push_back(z.conj());
  return out;
}

void axpy(Vector &a, const Scalar &s, std::span<const Scalar> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  if (s.is_zero())
    return;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (!b[k].is_zero())
      a[k] += s * b[k];
}

} // namespace qkcf
