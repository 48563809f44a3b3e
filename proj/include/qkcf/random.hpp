#pragma once

#include "qkcf/forms.hpp"

#include <random>

namespace qkcf {

/// Deterministic generators for scramble trials and property tests.
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  /// p/q with |p| <= bound, 1 <= q <= bound.
  Rational rational(long bound = 4);
  Scalar gaussian(long bound = 4);

  Matrix matrix(std::size_t rows, std::size_t cols, bool complex,
                long bound = 4);
  /// Rejection-sampled until rank is full.
  Matrix invertible(std::size_t n, bool complex, long bound = 4);
  /// Nondegenerate antisymmetric matrix of even size.
  Matrix nondegenerate_skew(std::size_t n, long bound = 4);
  /// h = A^* A + I.
  HermitianMetric hermitian_metric(std::size_t m, long bound = 3);

  /// Random 2-step (or abelian) real algebra of the given dimension:
  /// brackets of a generating block land in a central block, then a random
  /// rational change of basis hides the block structure.
  LieAlgebra two_step_algebra(std::size_t dim);

  /// Random form of the given total degree with up to `terms` monomials.
  InvariantForm form(std::size_t half_dim, std::size_t degree,
                     std::size_t terms, long bound = 3);

  std::mt19937_64 &engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace qkcf
