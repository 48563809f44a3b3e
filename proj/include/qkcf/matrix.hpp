#pragma once

#include "qkcf/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace qkcf {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  static Matrix diagonal(std::span<const Scalar> d);
  static Matrix from_columns(std::span<const Vector> columns,
                             std::size_t rows);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static Matrix column_vector(std::span<const Scalar> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar &operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Scalar &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Scalar> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  Matrix conj() const;
  Matrix adjoint() const { return conj().transpose(); }

  bool is_zero() const;
  bool is_real() const;

  Matrix &operator+=(const Matrix &o);
  Matrix &operator-=(const Matrix &o);
  Matrix &operator*=(const Scalar &s);

  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar &s) { return a *= s; }
  friend Matrix operator*(const Scalar &s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend Vector operator*(const Matrix &a, std::span<const Scalar> v);
  Matrix operator-() const;

  friend bool operator==(const Matrix &a, const Matrix &b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream &operator<<(std::ostream &os, const Matrix &m);

Matrix hstack(const Matrix &a, const Matrix &b);
Matrix vstack(const Matrix &a, const Matrix &b);

// Vector helpers.
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar &s, std::span<const Scalar> v);
Vector conj(std::span<const Scalar> v);
/// a += s * b
void axpy(Vector &a, const Scalar &s, std::span<const Scalar> b);

} // namespace qkcf
