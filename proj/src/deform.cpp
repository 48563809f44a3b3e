#include "qkcf/deform.hpp"

#include "qkcf/error.hpp"
#include "qkcf/linalg.hpp"

namespace qkcf {

namespace {

void require_qk(const LieAlgebra &g, const AlmostComplexStructure &j) {
  if (!is_qk_chern_flat(g, j).holds)
    throw Error(ErrorCode::PreconditionViolated,
                "structure is not quasi-Kaehler Chern-flat");
}

Matrix stack_rows(const std::vector<Matrix> &ms, std::size_t n) {
  Matrix out(ms.size(), n * n);
  for (std::size_t r = 0; r < ms.size(); ++r) {
    const Vector v = flatten(ms[r]);
    std::copy(v.begin(), v.end(), out.row(r).begin());
  }
  return out;
}

} // namespace

Vector flatten(const Matrix &m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const Scalar &x : m.row(r))
      v.push_back(x);
  return v;
}

Matrix unflatten(std::span<const Scalar> v, std::size_t n) {
  if (v.size() != n * n)
    throw Error(ErrorCode::DimensionMismatch, "vector is not an n x n matrix");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = v[r * n + c];
  return m;
}

Matrix deformation_system(const LieAlgebra &g,
                          const AlmostComplexStructure &j) {
  const std::size_t n = g.dim();
  if (j.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "J and algebra sizes differ");
  const Matrix &jm = j.matrix();
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  Matrix sys(n * n + n * n * n, n * n);
  std::size_t row = 0;
  // (LJ + JL)(a, b) = 0
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b, ++row)
      for (std::size_t t = 0; t < n; ++t) {
        if (!jm(t, b).is_zero())
          sys(row, var(a, t)) += jm(t, b);
        if (!jm(a, t).is_zero())
          sys(row, var(t, b)) += jm(a, t);
      }
  // L[e_i,e_j] + [L e_i, e_j] = 0 for ordered pairs; the swapped pair gives
  // the [X, LY] half.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj) {
      const Vector bij = g.bracket_basis(i, jj);
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (std::size_t r = 0; r < n; ++r) {
          if (!bij[r].is_zero())
            sys(row, var(k, r)) += bij[r];
          const Scalar c = g.constant(r, jj, k);
          if (!c.is_zero())
            sys(row, var(r, i)) += c;
        }
      }
    }
  return sys;
}

DeformationSpace deformation_space(const LieAlgebra &g,
                                   const AlmostComplexStructure &j) {
  require_qk(g, j);
  const std::size_t n = g.dim();
  const Matrix sys = deformation_system(g, j);
  DeformationSpace d;
  for (const Vector &v : kernel_basis(sys))
    d.kernel_basis.push_back(unflatten(v, n));
  for (std::size_t x = 0; x < n; ++x) {
    Matrix ad = g.ad(unit_vector(n, x));
    if (!is_zero(sys * flatten(ad)))
      throw Error(ErrorCode::InternalInconsistency,
                  "inner direction ad_e" + std::to_string(x + 1) +
                      " violates the deformation system");
    d.inner_basis.push_back(std::move(ad));
  }
  const Matrix inner = stack_rows(d.inner_basis, n);
  const Matrix kern = stack_rows(d.kernel_basis, n);
  d.inner_rank = rank(inner);
  d.quotient_dim = d.kernel_basis.size() - d.inner_rank;
  const std::size_t joint = rank(vstack(kern, inner));
  if (joint != d.kernel_basis.size() || joint - d.inner_rank != d.quotient_dim)
    throw Error(ErrorCode::InternalInconsistency,
                "quotient dimension disagrees between elimination routes");
  return d;
}

ConstraintReport structural_constraints_check(const DeformationSpace &d,
                                              const LieAlgebra &g,
                                              const AlmostComplexStructure &) {
  const Subspace derived = derived_algebra(g);
  const Subspace z = center(g);
  for (std::size_t t = 0; t < d.kernel_basis.size(); ++t) {
    const Matrix &l = d.kernel_basis[t];
    for (const Vector &v : derived.basis())
      if (!is_zero(l * v))
        return {false, t, "L does not vanish on [g,g]"};
    for (std::size_t c = 0; c < g.dim(); ++c)
      if (!z.contains(l.column(c)))
        return {false, t, "L(g) is not contained in the center"};
  }
  return {};
}

Matrix lie_derivative_direction(const LieAlgebra &g,
                                const AlmostComplexStructure &j,
                                std::span<const Scalar> x) {
  require_qk(g, j);
  if (x.size() != g.dim())
    throw Error(ErrorCode::DimensionMismatch, "vector has wrong length");
  return Scalar(-2) * (j.matrix() * g.ad(x));
}

} // namespace qkcf
