#include "qkcf/random.hpp"

#include "qkcf/error.hpp"
#include "qkcf/linalg.hpp"

#include <bit>

namespace qkcf {

long RandomSource::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rational RandomSource::rational(long bound) {
  Rational q(integer(-bound, bound), integer(1, bound));
  q.canonicalize();
  return q;
}

Scalar RandomSource::gaussian(long bound) {
  Rational re = rational(bound);
  Rational im = rational(bound);
  return {re, im};
}

Matrix RandomSource::matrix(std::size_t rows, std::size_t cols, bool complex,
                            long bound) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = complex ? gaussian(bound) : Scalar(rational(bound));
  return m;
}

Matrix RandomSource::invertible(std::size_t n, bool complex, long bound) {
  for (;;) {
    Matrix m = matrix(n, n, complex, bound);
    if (rank(m) == n)
      return m;
  }
}

Matrix RandomSource::nondegenerate_skew(std::size_t n, long bound) {
  if (n % 2 != 0)
    throw Error(ErrorCode::OddDimension, "skew form of odd size is degenerate");
  for (;;) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) {
        m(r, c) = gaussian(bound);
        m(c, r) = -m(r, c);
      }
    if (rank(m) == n)
      return m;
  }
}

HermitianMetric RandomSource::hermitian_metric(std::size_t m, long bound) {
  Matrix a = matrix(m, m, true, bound);
  return HermitianMetric(a.adjoint() * a + Matrix::identity(m));
}

LieAlgebra RandomSource::two_step_algebra(std::size_t dim) {
  // dim = generators + central part, with at least one central direction
  // when there is room for a bracket.
  const std::size_t central =
      dim >= 3 ? static_cast<std::size_t>(integer(1, static_cast<long>(dim) - 2))
               : 0;
  const std::size_t gens = dim - central;
  StructureTensor c(dim);
  for (std::size_t a = 0; a < gens; ++a)
    for (std::size_t b = a + 1; b < gens; ++b)
      for (std::size_t k = gens; k < dim; ++k)
        if (integer(0, 2) == 0)
          c.set(a, b, k, Scalar(rational(3)));
  LieAlgebra block(std::move(c));
  return change_basis(block, invertible(dim, false, 2));
}

InvariantForm RandomSource::form(std::size_t half_dim, std::size_t degree,
                                 std::size_t terms, long bound) {
  const std::size_t n = 2 * half_dim;
  InvariantForm f(half_dim);
  if (degree > n)
    return f;
  for (std::size_t t = 0; t < terms; ++t) {
    InvariantForm::Mask mask = 0;
    while (static_cast<std::size_t>(std::popcount(mask)) < degree)
      mask |= InvariantForm::Mask{1} << integer(0, static_cast<long>(n) - 1);
    f.add(mask, gaussian(bound));
  }
  return f;
}

} // namespace qkcf
