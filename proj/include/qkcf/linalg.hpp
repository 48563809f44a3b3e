#pragma once

#include "qkcf/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qkcf {

/*
 * Exact dense linear algebra over Q(i).
 *
 * Two independent elimination routes live here:
 *   - rank() and determinant() clear denominators row by row and run
 *     Bareiss fraction-free elimination over the Gaussian integers Z[i].
 *     Every intermediate entry is a minor of the cleared matrix, so the
 *     division in each update step is exact.
 *   - reduce() is a Gauss-Jordan reduction over Q(i) that skips zero
 *     entries; kernel_basis, solve and inverse are built on it.
 */

/// Reduced row echelon form with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

std::size_t rank(const Matrix &m);
Scalar determinant(const Matrix &m);

Echelon reduce(const Matrix &m);

/// Basis of { v : m v = 0 }. One vector per free column, with a 1 in that
/// column.
std::vector<Vector> kernel_basis(const Matrix &m);

/// One exact solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix &m, const Matrix &b);

/// Throws Error(Singular) when m is not invertible.
Matrix inverse(const Matrix &m);

/// Coordinates of v in the basis given by the columns of `basis`, or nullopt
/// when v is outside their span.
std::optional<Vector> coordinates(const Matrix &basis,
                                  std::span<const Scalar> v);

/// Basis of the span of the given vectors (a maximal independent subset, in
/// input order).
std::vector<Vector> independent_subset(std::span<const Vector> vectors,
                                       std::size_t dim);

} // namespace qkcf
