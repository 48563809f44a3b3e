#include "qkcf/lie_algebra.hpp"

#include "qkcf/error.hpp"
#include "qkcf/linalg.hpp"

#include <sstream>

namespace qkcf {

const char *field_tag(Field f) {
  return f == Field::Rational ? "Q" : "Qi";
}

StructureTensor::StructureTensor(std::size_t dim)
    : dim_(dim), pairs_(dim * (dim ? dim - 1 : 0) / 2, Vector(dim)) {}

std::size_t StructureTensor::pair_index(std::size_t i, std::size_t j) const {
  // Row-major over the strict upper triangle.
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

Scalar StructureTensor::get(std::size_t i, std::size_t j,
                            std::size_t k) const {
  if (i == j)
    return 0;
  if (i < j)
    return pairs_[pair_index(i, j)][k];
  return -pairs_[pair_index(j, i)][k];
}

void StructureTensor::set(std::size_t i, std::size_t j, std::size_t k,
                          Scalar value) {
  if (i >= dim_ || j >= dim_ || k >= dim_)
    throw Error(ErrorCode::IndexRange, "structure constant index out of range");
  if (i == j)
    throw Error(ErrorCode::IndexOrder, "[e_i, e_i] is zero by antisymmetry");
  if (i < j)
    pairs_[pair_index(i, j)][k] = std::move(value);
  else
    pairs_[pair_index(j, i)][k] = -value;
}

Vector StructureTensor::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j)
    return Vector(dim_);
  if (i < j)
    return pairs_[pair_index(i, j)];
  return scale(-1, pairs_[pair_index(j, i)]);
}

Vector StructureTensor::bracket(std::span<const Scalar> x,
                                std::span<const Scalar> y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "bracket argument length");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || y[j].is_zero())
        continue;
      const Scalar xy = x[i] * y[j];
      if (i < j)
        axpy(out, xy, pairs_[pair_index(i, j)]);
      else
        axpy(out, -xy, pairs_[pair_index(j, i)]);
    }
  }
  return out;
}

bool StructureTensor::is_real() const {
  for (const auto &v : pairs_)
    for (const auto &z : v)
      if (!z.is_real())
        return false;
  return true;
}

std::vector<JacobiViolation> jacobi_defect(const StructureTensor &c) {
  const std::size_t n = c.dim();
  std::vector<JacobiViolation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ek = unit_vector(n, k), ei = unit_vector(n, i),
                     ej = unit_vector(n, j);
        Vector sum = c.bracket(c.bracket_basis(i, j), ek);
        sum = add(sum, c.bracket(c.bracket_basis(j, k), ei));
        sum = add(sum, c.bracket(c.bracket_basis(k, i), ej));
        if (!is_zero(sum))
          out.push_back({i, j, k, std::move(sum)});
      }
  return out;
}

LieAlgebra::LieAlgebra(StructureTensor constants, Field field)
    : c_(std::move(constants)), field_(field) {
  if (field_ == Field::Rational && !c_.is_real())
    throw Error(ErrorCode::ComplexCoefficientInRealAlgebra,
                "non-real structure constant in an algebra over Q");
  auto defects = jacobi_defect(c_);
  if (!defects.empty()) {
    std::ostringstream os;
    const auto &d = defects.front();
    os << "Jacobi identity fails on " << defects.size()
       << " triple(s); first (" << d.i + 1 << "," << d.j + 1 << ","
       << d.k + 1 << ") has cyclic sum " << Matrix::column_vector(d.cyclic_sum)
              .transpose();
    throw Error(ErrorCode::JacobiFailure, os.str());
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  return LieAlgebra(StructureTensor(dim));
}

Vector LieAlgebra::bracket(std::span<const Scalar> x,
                           std::span<const Scalar> y) const {
  return c_.bracket(x, y);
}

Matrix LieAlgebra::ad(std::span<const Scalar> x) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = bracket(x, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k)
      m(k, j) = std::move(col[k]);
  }
  return m;
}

Subspace::Subspace(std::size_t ambient_dim, std::span<const Vector> spanning)
    : ambient_(ambient_dim),
      basis_(independent_subset(spanning, ambient_dim)) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> basis;
  for (std::size_t k = 0; k < ambient_dim; ++k)
    basis.push_back(unit_vector(ambient_dim, k));
  return Subspace(ambient_dim, basis);
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (is_zero(v))
    return true;
  if (basis_.empty())
    return false;
  return coordinates(matrix(), v).has_value();
}

bool Subspace::contains(const Subspace &other) const {
  for (const auto &v : other.basis())
    if (!contains(v))
      return false;
  return true;
}

Matrix Subspace::matrix() const {
  return Matrix::from_columns(basis_, ambient_);
}

std::vector<Subspace> lower_central_series(const LieAlgebra &g) {
  const std::size_t n = g.dim();
  std::vector<Subspace> series{Subspace::full(n)};
  while (series.back().dim() > 0) {
    std::vector<Vector> span;
    for (const auto &x : series.back().basis())
      for (std::size_t j = 0; j < n; ++j)
        span.push_back(g.bracket(x, unit_vector(n, j)));
    Subspace next(n, span);
    if (next.dim() == series.back().dim())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_step(const LieAlgebra &g) {
  auto series = lower_central_series(g);
  if (series.back().dim() != 0)
    return std::nullopt;
  return series.size() - 1;
}

Subspace center(const LieAlgebra &g) {
  const std::size_t n = g.dim();
  // Row (j,k): sum_i x_i c_{ij}^k = 0.
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      Vector b = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        stacked(j * n + k, i) = std::move(b[k]);
    }
  auto kernel = kernel_basis(stacked);
  return Subspace(n, kernel);
}

Subspace derived_algebra(const LieAlgebra &g) {
  const std::size_t n = g.dim();
  std::vector<Vector> span;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      span.push_back(g.bracket_basis(i, j));
  return Subspace(n, span);
}

LieAlgebra change_basis(const LieAlgebra &g, const Matrix &q) {
  const std::size_t n = g.dim();
  if (q.rows() != n || q.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "change of basis shape");
  const Matrix qinv = inverse(q);
  const auto f = q.columns();
  StructureTensor c(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector coords = qinv * g.bracket(f[a], f[b]);
      for (std::size_t k = 0; k < n; ++k)
        if (!coords[k].is_zero())
          c.set(a, b, k, coords[k]);
    }
  Field field = (g.field() == Field::Rational && q.is_real())
                    ? Field::Rational
                    : Field::GaussianRational;
  return LieAlgebra(std::move(c), field, LieAlgebra::Unchecked{});
}

} // namespace qkcf
