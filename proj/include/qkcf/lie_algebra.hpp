#pragma once

#include "qkcf/matrix.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace qkcf {

enum class Field { Rational, GaussianRational };

const char *field_tag(Field f); // "Q" | "Qi"

/// Raw structure constants c_{ij}^k for i < j, prior to any validation.
/// Indices are 0-based throughout the library.
class StructureTensor {
public:
  explicit StructureTensor(std::size_t dim = 0);

  std::size_t dim() const { return dim_; }

  /// c_{ij}^k with the antisymmetric extension to i >= j.
  Scalar get(std::size_t i, std::size_t j, std::size_t k) const;
  /// Sets c_{ij}^k and, implicitly, c_{ji}^k = -c_{ij}^k. Requires i != j.
  void set(std::size_t i, std::size_t j, std::size_t k, Scalar value);

  /// [e_i, e_j] in coordinates.
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

  bool is_real() const;

  friend bool operator==(const StructureTensor &,
                         const StructureTensor &) = default;

private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::size_t dim_;
  std::vector<Vector> pairs_; // pair (i<j) -> [e_i, e_j]
};

struct JacobiViolation {
  std::size_t i, j, k;
  Vector cyclic_sum;
};

/// Triples i < j < k whose cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] +
/// [[e_k,e_i],e_j] is nonzero.
std::vector<JacobiViolation> jacobi_defect(const StructureTensor &c);

/// Finite-dimensional Lie algebra over Q or Q(i). Jacobi is verified at
/// construction.
class LieAlgebra {
public:
  /// Throws Error(JacobiFailure) listing the first violating triple, or
  /// Error(ComplexCoefficientInRealAlgebra) for non-real constants over Q.
  LieAlgebra(StructureTensor constants, Field field = Field::Rational);

  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return c_.dim(); }
  Field field() const { return field_; }
  const StructureTensor &constants() const { return c_; }

  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_.get(i, j, k);
  }
  Vector bracket_basis(std::size_t i, std::size_t j) const {
    return c_.bracket_basis(i, j);
  }
  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

  /// Matrix of ad_x = [x, .].
  Matrix ad(std::span<const Scalar> x) const;

  friend bool operator==(const LieAlgebra &, const LieAlgebra &) = default;

private:
  // change_basis output: isomorphic to a checked algebra, so Jacobi holds.
  struct Unchecked {};
  LieAlgebra(StructureTensor constants, Field field, Unchecked)
      : c_(std::move(constants)), field_(field) {}
  friend LieAlgebra change_basis(const LieAlgebra &g, const Matrix &q);

  StructureTensor c_;
  Field field_;
};

/// Linear subspace of an ambient coordinate space, with an independent basis.
class Subspace {
public:
  Subspace(std::size_t ambient_dim, std::span<const Vector> spanning);

  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector> &basis() const { return basis_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace &other) const;
  /// Basis vectors as columns.
  Matrix matrix() const;

private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

/// g, [g,g], [[g,g],g], ... until the dimension stops dropping.
std::vector<Subspace> lower_central_series(const LieAlgebra &g);

/// k such that g is k-step nilpotent, or nullopt if g is not nilpotent.
std::optional<std::size_t> nilpotency_step(const LieAlgebra &g);

Subspace center(const LieAlgebra &g);
Subspace derived_algebra(const LieAlgebra &g);

/// Brackets re-expressed in the basis f_a = sum_i q(i,a) e_i.
/// Throws Error(Singular) if q is not invertible. Skips the Jacobi check,
/// which is invariant under an exact change of basis.
LieAlgebra change_basis(const LieAlgebra &g, const Matrix &q);

} // namespace qkcf
