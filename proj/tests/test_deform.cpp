#include "doctest.h"

#include "oracles.hpp"
#include "qkcf/constructions.hpp"
#include "qkcf/deform.hpp"
#include "qkcf/error.hpp"
#include "qkcf/linalg.hpp"
#include "qkcf/random.hpp"

using namespace qkcf;

namespace {

// Kernel dimension of the conditions written out entry by entry, with the
// unknown L(r, c) at column c*n + r (transposed from the library's layout).
std::size_t oracle_kernel_dim(const LieAlgebra &g, const Matrix &j) {
  const std::size_t n = g.dim();
  oracle::Grid rows;
  auto col = [n](std::size_t r, std::size_t c) { return c * n + r; };
  // (LJ + JL)(a, b)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Scalar> row(n * n);
      for (std::size_t k = 0; k < n; ++k) {
        row[col(a, k)] += j(k, b);
        row[col(k, b)] += j(a, k);
      }
      rows.push_back(row);
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y)
        continue;
      const std::vector<Scalar> b = oracle::bracket(g, unit_vector(n, x),
                                                    unit_vector(n, y));
      for (std::size_t k = 0; k < n; ++k) {
        // L[x,y] + [Lx, y] and L[x,y] + [x, Ly], component k
        std::vector<Scalar> first(n * n), second(n * n);
        for (std::size_t c = 0; c < n; ++c) {
          first[col(k, c)] += b[c];
          second[col(k, c)] += b[c];
        }
        for (std::size_t r = 0; r < n; ++r) {
          first[col(r, x)] += g.constant(r, y, k);
          second[col(r, y)] += g.constant(x, r, k);
        }
        rows.push_back(first);
        rows.push_back(second);
      }
    }
  return n * n - oracle::rank(rows);
}

std::vector<std::string> qk_entries() {
  std::vector<std::string> out;
  for (const std::string &name : catalog_names()) {
    const CatalogEntry e = catalog(name);
    if (e.pair.j && is_qk_chern_flat(e.pair.algebra, *e.pair.j).holds)
      out.push_back(name);
  }
  return out;
}

bool in_span(const std::vector<Matrix> &basis, const Matrix &m) {
  std::vector<Vector> cols;
  for (const Matrix &b : basis)
    cols.push_back(flatten(b));
  const std::size_t before =
      cols.empty() ? 0 : rank(Matrix::from_columns(cols, flatten(m).size()));
  cols.push_back(flatten(m));
  return rank(Matrix::from_columns(cols, flatten(m).size())) == before;
}

} // namespace

TEST_CASE("flatten layout") {
  const Matrix m{{1, 2}, {3, 4}};
  CHECK(flatten(m) == Vector{1, 2, 3, 4});
  CHECK(unflatten(flatten(m), 2) == m);
}

TEST_CASE("Iwasawa has no deformation directions beyond the inner ones") {
  const CatalogEntry iw = catalog("iwasawa_j3");
  const DeformationSpace d = deformation_space(iw.pair.algebra, *iw.pair.j);
  CHECK(d.quotient_dim == 0);
  CHECK(d.kernel_basis.size() == d.inner_rank);
  CHECK(d.inner_rank == 4); // ad vanishes exactly on the 2-dim center
  CHECK(d.kernel_basis.size() ==
        oracle_kernel_dim(iw.pair.algebra, iw.pair.j->matrix()));
}

TEST_CASE("abelian quotient is the full anticommutant") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const LieAlgebra g = LieAlgebra::abelian(2 * n);
    const AlmostComplexStructure j = AlmostComplexStructure::standard(2 * n);
    const DeformationSpace d = deformation_space(g, j);
    CHECK(d.quotient_dim == 2 * n * n);
    CHECK(d.inner_rank == 0);
    CHECK(d.quotient_dim == oracle::anticommutant_dim(j.matrix()));
  }
}

TEST_CASE("center-one models are rigid") {
  for (std::size_t m = 1; m <= 3; ++m) {
    CAPTURE(m);
    const CatalogEntry e = catalog("centro1_model(" + std::to_string(m) + ")");
    const DeformationSpace d = deformation_space(e.pair.algebra, *e.pair.j);
    CHECK(d.quotient_dim == 0);
  }
}

TEST_CASE("kernel agrees with the entrywise system on qK entries") {
  for (const std::string &name : qk_entries()) {
    CAPTURE(name);
    const CatalogEntry e = catalog(name);
    if (e.pair.algebra.dim() > 8)
      continue; // the naive elimination is slow beyond this
    const DeformationSpace d = deformation_space(e.pair.algebra, *e.pair.j);
    CHECK(d.kernel_basis.size() ==
          oracle_kernel_dim(e.pair.algebra, e.pair.j->matrix()));
  }
}

TEST_CASE("kernel elements satisfy the conditions and contain the inner ones") {
  for (const std::string &name : qk_entries()) {
    CAPTURE(name);
    const CatalogEntry e = catalog(name);
    const LieAlgebra &g = e.pair.algebra;
    const Matrix &j = e.pair.j->matrix();
    const std::size_t n = g.dim();
    const DeformationSpace d = deformation_space(g, *e.pair.j);
    for (const Matrix &l : d.kernel_basis) {
      CHECK(l * j == -(j * l));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
          const Vector ex = unit_vector(n, x), ey = unit_vector(n, y);
          const Vector lb = l * g.bracket(ex, ey);
          CHECK(lb == scale(-1, g.bracket(l * ex, ey)));
          CHECK(lb == scale(-1, g.bracket(ex, l * ey)));
        }
    }
    for (const Matrix &a : d.inner_basis)
      CHECK(in_span(d.kernel_basis, a));
    CHECK(d.quotient_dim == d.kernel_basis.size() - d.inner_rank);
  }
}

TEST_CASE("structural constraints") {
  for (const char *name : {"iwasawa_j3", "abelian(6)", "dim5_irreducible",
                           "dim4_model", "centro1_model(2)"}) {
    CAPTURE(name);
    const CatalogEntry e = catalog(name);
    const DeformationSpace d = deformation_space(e.pair.algebra, *e.pair.j);
    const ConstraintReport r =
        structural_constraints_check(d, e.pair.algebra, *e.pair.j);
    CHECK(r.holds);
    CHECK(!r.index);
  }
  // a deliberately bad element is reported
  const CatalogEntry iw = catalog("iwasawa_j3");
  DeformationSpace bad = deformation_space(iw.pair.algebra, *iw.pair.j);
  bad.kernel_basis.push_back(Matrix::identity(6));
  const ConstraintReport r =
      structural_constraints_check(bad, iw.pair.algebra, *iw.pair.j);
  CHECK(!r.holds);
  CHECK(r.index == bad.kernel_basis.size() - 1);
}

TEST_CASE("Lie derivative directions are inner") {
  for (const std::string &name : qk_entries()) {
    CAPTURE(name);
    const CatalogEntry e = catalog(name);
    const LieAlgebra &g = e.pair.algebra;
    const AlmostComplexStructure &j = *e.pair.j;
    const std::size_t n = g.dim();
    for (std::size_t x = 0; x < n; ++x) {
      const Vector ex = unit_vector(n, x);
      const Matrix l = lie_derivative_direction(g, j, ex);
      // -2J[x, .] = [2Jx, .]
      CHECK(l == g.ad(scale(2, j.apply(ex))));
      // and column by column against the bracket oracle
      for (std::size_t y = 0; y < n; ++y) {
        const Vector col =
            oracle::apply(j.matrix(), oracle::bracket(g, ex, unit_vector(n, y)));
        CHECK(l.column(y) == scale(-2, col));
      }
    }
  }
  const CatalogEntry iw = catalog("iwasawa_j3");
  const Matrix l1 =
      lie_derivative_direction(iw.pair.algebra, *iw.pair.j, unit_vector(6, 0));
  CHECK(l1 != Matrix::zero(6, 6));
  const Subspace z_iw = center(iw.pair.algebra);
  for (const Vector &z : z_iw.basis())
    CHECK(lie_derivative_direction(iw.pair.algebra, *iw.pair.j, z) ==
          Matrix::zero(6, 6));
  RandomSource rng(61);
  const Vector x = rng.matrix(4, 1, false).column(0);
  CHECK(lie_derivative_direction(LieAlgebra::abelian(4),
                                 AlmostComplexStructure::standard(4),
                                 x) == Matrix::zero(4, 4));
}

TEST_CASE("inclusion on random doubled algebras") {
  RandomSource rng(67);
  for (int t = 0; t < 6; ++t) {
    const auto d = conjugate_complexification(rng.two_step_algebra(rng.integer(2, 4)));
    const DeformationSpace s = deformation_space(d.algebra, *d.j);
    for (const Matrix &a : s.inner_basis)
      CHECK(in_span(s.kernel_basis, a));
    CHECK(structural_constraints_check(s, d.algebra, *d.j).holds);
  }
}

TEST_CASE("deformation preconditions") {
  const CatalogEntry ch = catalog("complex_heisenberg_bicomplex");
  try {
    deformation_space(ch.pair.algebra, *ch.pair.j);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
  CHECK_THROWS_AS(lie_derivative_direction(ch.pair.algebra, *ch.pair.j,
                                           unit_vector(6, 0)),
                  Error);
}
