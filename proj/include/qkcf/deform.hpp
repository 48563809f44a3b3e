#pragma once

#include "qkcf/almost_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qkcf {

/// Real endomorphisms L with LJ = -JL and L[X,Y] = -[LX,Y] = -[X,LY],
/// modulo the inner directions ad_X.
struct DeformationSpace {
  std::vector<Matrix> kernel_basis;
  std::vector<Matrix> inner_basis; // ad_{e_k} for every basis vector
  std::size_t inner_rank = 0;
  std::size_t quotient_dim = 0; // real dimension
};

/// The linear system on the n^2 entries of L (unknown r*n + c is L(r, c)).
Matrix deformation_system(const LieAlgebra &g, const AlmostComplexStructure &j);

/// Throws Error(PreconditionViolated) unless (g, J) is quasi-Kaehler
/// Chern-flat; Error(InternalInconsistency) if some ad_X fails the system or
/// the two quotient counts disagree.
DeformationSpace deformation_space(const LieAlgebra &g,
                                   const AlmostComplexStructure &j);

struct ConstraintReport {
  bool holds = true;
  /// First failing kernel element and which constraint failed.
  std::optional<std::size_t> index;
  std::string what;
};

/// Every kernel element kills [g,g] and maps g into the center.
ConstraintReport structural_constraints_check(const DeformationSpace &d,
                                              const LieAlgebra &g,
                                              const AlmostComplexStructure &j);

/// Matrix of Y -> -2 J [x, Y]. Throws Error(PreconditionViolated) unless
/// (g, J) is quasi-Kaehler Chern-flat.
Matrix lie_derivative_direction(const LieAlgebra &g,
                                const AlmostComplexStructure &j,
                                std::span<const Scalar> x);

Vector flatten(const Matrix &m);
Matrix unflatten(std::span<const Scalar> v, std::size_t n);

} // namespace qkcf
