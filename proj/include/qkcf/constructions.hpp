#pragma once

#include "qkcf/almost_complex.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qkcf {

/// A Lie algebra together with an (optional) almost complex structure.
struct AlmostComplexLieAlgebra {
  LieAlgebra algebra;
  std::optional<AlmostComplexStructure> j;
};

/// [X(x)a, Y(x)b] = conj(ab) [X,Y] on the real basis X_k(x)1 (first n
/// slots), X_k(x)i (last n slots):
///
///   [X(x)1, Y(x)1] =  [X,Y](x)1
///   [X(x)i, Y(x)i] = -[X,Y](x)1
///   [X(x)1, Y(x)i] = -[X,Y](x)i
///
/// with J(X(x)1) = X(x)i, J(X(x)i) = -X(x)1. Throws
/// Error(NotTwoStepNilpotent) unless h is at most 2-step nilpotent.
AlmostComplexLieAlgebra conjugate_complexification(const LieAlgebra &h);

/// One prescribed bracket [Z_i, Z_j] = sum_k coeffs[k] Zb_k of a complex
/// (1,0)-frame (0-based indices, i < j).
struct FrameBracket {
  std::size_t i, j;
  Vector coeffs;
};

/// Real algebra on x_1..x_m, y_1..y_m (y_k = J x_k) whose split frame
/// Z_k = x_k - i y_k satisfies the given brackets, [Z_i, Zb_j] = 0 and
/// [Zb_i, Zb_j] = conj [Z_i, Z_j]. Throws Error(JacobiFailure) if the data is
/// not a Lie algebra.
AlmostComplexLieAlgebra realify_frame(std::size_t m,
                                      std::span<const FrameBracket> brackets);

/// Fixture verdicts attached to a catalog entry.
struct AdvertisedVerdicts {
  bool chern_flat = false;
  bool qk_chern_flat = false;
  bool integrable = false;
};

struct CatalogEntry {
  std::string name;
  AlmostComplexLieAlgebra pair;
  std::optional<AdvertisedVerdicts> advertised; // present iff J is
};

/// abelian(n), heisenberg3, heisenberg(2m+1), iwasawa_j3, iwasawa_e_frame,
/// complex_heisenberg_bicomplex, dim4_model, dim5_irreducible,
/// centro1_model(m). Throws Error(UnknownCatalogName) or
/// Error(InvalidParameter).
CatalogEntry catalog(std::string_view name);

/// Names of every parameter-free entry plus a representative instance of each
/// parametrized family.
std::vector<std::string> catalog_names();

LieAlgebra heisenberg(std::size_t dim);

/// Real map iwasawa_j3 -> iwasawa_e_frame (columns = images of X_1..X_6):
/// X1->e1, X4->-e2, X2->e4, X5->e3, X3->-e6, X6->e5.
Matrix iwasawa_to_e_frame();
/// The same correspondence with X3->e5, X6->e6.
Matrix iwasawa_to_e_frame_as_printed();

struct IsomorphismReport {
  bool holds = false;
  bool brackets = false;
  bool intertwines_j = false; // true when no J is supplied
  std::optional<Witness> witness;
};

/// map(x) for x in g1 has coordinates map * x in g2. Checks
/// map[e_a, e_b] = [map e_a, map e_b] and map J1 = J2 map. Throws
/// Error(Singular) for a non-invertible map.
IsomorphismReport verify_frame_isomorphism(
    const LieAlgebra &g1, const std::optional<AlmostComplexStructure> &j1,
    const LieAlgebra &g2, const std::optional<AlmostComplexStructure> &j2,
    const Matrix &map);

struct ScrambledPair {
  LieAlgebra algebra;
  AlmostComplexStructure j;
  /// Columns x'_1..x'_m, J x'_1..J x'_m in the original real basis.
  Matrix real_change;
};

/// Rewrites (g, J) in the real basis coming from the (1,0)-frame
/// Z' = Z p, with Z the frame of split(g, J). The split frame of the result
/// is exactly Z'. Throws Error(Singular) if p is not invertible.
ScrambledPair scramble_frame(const LieAlgebra &g,
                             const AlmostComplexStructure &j, const Matrix &p);

} // namespace qkcf
