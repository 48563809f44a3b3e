#pragma once

#include "qkcf/lie_algebra.hpp"

#include <optional>
#include <string>

namespace qkcf {

/// Rational endomorphism J with J^2 = -I.
class AlmostComplexStructure {
public:
  /// Throws Error(OddDimension) or Error(NotAlmostComplex).
  explicit AlmostComplexStructure(Matrix j);

  /// x_k -> x_{m+k}, x_{m+k} -> -x_k on a 2m-dimensional space.
  static AlmostComplexStructure standard(std::size_t dim);

  std::size_t dim() const { return j_.rows(); }
  const Matrix &matrix() const { return j_; }
  Vector apply(std::span<const Scalar> v) const { return j_ * v; }

  friend bool operator==(const AlmostComplexStructure &,
                         const AlmostComplexStructure &) = default;

private:
  Matrix j_;
};

/*
 * g (x) C = g^{1,0} (+) g^{0,1} in a chosen (1,0)-frame Z_1..Z_m.
 *
 * The combined basis of g (x) C is B = (Z_1..Z_m, Zb_1..Zb_m); combined index
 * k < m is Z_{k+1} and m + k is Zb_{k+1}. `complexified()` is g (x) C written
 * in that basis, so its structure constants are the c_{ab}^c of the frame.
 */
class ComplexSplitting {
public:
  std::size_t real_dim() const { return 2 * m_; }
  std::size_t half_dim() const { return m_; }

  /// Columns Z_k expressed in the real basis of g.
  const Matrix &frame() const { return frame_; }
  /// Columns Z_1..Z_m, Zb_1..Zb_m.
  const Matrix &basis() const { return basis_; }
  const Matrix &basis_inverse() const { return basis_inv_; }
  const LieAlgebra &complexified() const { return complexified_; }

  static std::size_t bar(std::size_t m, std::size_t k) { return m + k; }

  /// Complex constant c_{ab}^c in the combined basis.
  Scalar constant(std::size_t a, std::size_t b, std::size_t c) const {
    return complexified_.constant(a, b, c);
  }
  /// [B_a, B_b] in combined-basis coordinates.
  Vector bracket(std::size_t a, std::size_t b) const {
    return complexified_.bracket_basis(a, b);
  }

  /// True iff [g^{1,0}, g^{0,1}] = 0 and [g^{1,0}, g^{1,0}] has no (1,0) part.
  bool has_qk_shape() const;

private:
  friend ComplexSplitting make_splitting(const LieAlgebra &g, Matrix frame);
  ComplexSplitting(std::size_t m, Matrix frame, Matrix basis, Matrix inv,
                   LieAlgebra complexified)
      : m_(m), frame_(std::move(frame)), basis_(std::move(basis)),
        basis_inv_(std::move(inv)), complexified_(std::move(complexified)) {}

  std::size_t m_;
  Matrix frame_;
  Matrix basis_;
  Matrix basis_inv_;
  LieAlgebra complexified_;
};

/// Splitting in a frame already known to be a valid (1,0)-frame.
ComplexSplitting make_splitting(const LieAlgebra &g, Matrix frame);

/// Rational basis x_1..x_m adapted to J (x_k, J x_k together a basis), chosen
/// greedily from e_1, e_2, ... .
std::vector<Vector> adapted_basis(const AlmostComplexStructure &j);

/// Splitting in the frame Z_k = x_k - i J x_k of the adapted basis.
ComplexSplitting split(const LieAlgebra &g, const AlmostComplexStructure &j);

/// Splitting in a caller-supplied (1,0)-frame (columns in real coordinates).
/// Throws Error(InvalidParameter) unless every column satisfies J v = i v and
/// the columns are independent.
ComplexSplitting split_with_frame(const LieAlgebra &g,
                                  const AlmostComplexStructure &j,
                                  const Matrix &frame);

/// N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY] on basis pairs.
StructureTensor nijenhuis(const LieAlgebra &g, const AlmostComplexStructure &j);
bool is_integrable(const LieAlgebra &g, const AlmostComplexStructure &j);

struct Witness {
  std::size_t i = 0, j = 0; // 0-based
  Vector defect;
  std::string what;
};

struct ChernFlatReport {
  bool holds = false;
  bool via_splitting = false; // [g^{1,0}, g^{0,1}] = 0
  bool via_j = false;         // [JX,Y] = [X,JY]
  std::optional<Witness> witness;
};

/// Evaluates both characterizations and throws Error(InternalInconsistency)
/// if they disagree.
ChernFlatReport is_chern_flat(const LieAlgebra &g,
                              const AlmostComplexStructure &j);

struct QkChernFlatReport {
  bool holds = false;
  bool via_brackets = false; // [g10,g01] = 0, [g10,g10] in g01
  bool via_forms = false;    // del and delbar vanish on (1,0)-forms
  bool via_j = false;        // J[X,Y] = -[JX,Y] = -[X,JY]
  std::optional<Witness> witness;
};

QkChernFlatReport is_qk_chern_flat(const LieAlgebra &g,
                                   const AlmostComplexStructure &j);

/// Requires a Chern-flat pair (throws Error(PreconditionViolated)).
bool check_center_j_invariant(const LieAlgebra &g,
                              const AlmostComplexStructure &j);

/// sum_r c_{ij}^{rb} c_{rb kb}^l = 0 for all i, j, k, l, cross-checked against
/// the lower central series. Requires a splitting of qK shape.
bool two_step_certificate(const ComplexSplitting &s);

/// Real dimension of the center divided by two (the center of a Chern-flat
/// pair is J-invariant).
std::size_t complex_center_dim(const LieAlgebra &g);

} // namespace qkcf
