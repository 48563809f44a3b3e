#pragma once

#include "qkcf/almost_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qkcf {

/// (Omega_k)_{ij} = 1 for i < j, -1 for i > j; size 2k.
Matrix omega_k(std::size_t k);

/// Block diagonal with k copies of [[0,1],[-1,0]].
Matrix darboux_block(std::size_t k);

/// Invertible T with transpose(T) * omega * T = omega_k(size/2). Throws
/// Error(OddDimension) or Error(Degenerate).
Matrix skew_normal_form(const Matrix &omega);

struct NormalForm {
  /// P with new frame = split(g, J).frame() * P.
  Matrix frame_change;
  /// The new (1,0)-frame in real coordinates of g.
  Matrix frame;
  ComplexSplitting splitting;
  std::vector<std::string> steps;
  /// center-one only: the skew form on the complement and its congruence.
  std::optional<Matrix> omega;
  std::optional<Matrix> congruence;
};

/// Frame with [Z1,Z2] = Zb3 the only nonzero bracket of (1,0)-vectors.
/// Throws Error(PreconditionViolated) if (g, J) is not quasi-Kaehler
/// Chern-flat, Error(IntegrableStructure) if N = 0, Error(DimensionMismatch)
/// unless the complex dimension is 4.
NormalForm dim4_normal_form(const LieAlgebra &g,
                            const AlmostComplexStructure &j);

/// Frame with [Z_i,Z_j] = Zb_n for all i < j < n and Z_n central. Throws
/// Error(PreconditionViolated) if (g, J) is not quasi-Kaehler Chern-flat, the
/// complex center is not 1-dimensional, the complex dimension is even, or the
/// induced skew form is degenerate.
NormalForm center_one_normal_form(const LieAlgebra &g,
                                  const AlmostComplexStructure &j);

/// Complex structure constants of the dim4 and center-one models in their
/// own frames.
StructureTensor dim4_model_constants();
StructureTensor center_one_model_constants(std::size_t n);

struct Fingerprint {
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  std::size_t derived_dim = 0;
  std::optional<std::size_t> complex_center_dim;
  std::optional<bool> qk_chern_flat;
  std::optional<bool> integrable;
  std::size_t generic_ad_rank = 0;
  std::vector<std::size_t> lower_central_dims;

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
};

Fingerprint fingerprint(const LieAlgebra &g,
                        const std::optional<AlmostComplexStructure> &j);

std::string to_string(const Fingerprint &f);

} // namespace qkcf
