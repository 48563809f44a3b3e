// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "oracles.hpp"
#include "qkcf/algebra_io.hpp"
#include "qkcf/classify.hpp"
#include "qkcf/constructions.hpp"
#include "qkcf/deform.hpp"
#include "qkcf/error.hpp"
#include "qkcf/forms.hpp"
#include "qkcf/linalg.hpp"
#include "qkcf/random.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qkcf;

namespace {

// Collects the first few failure messages of a criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string &what) {
    if (!ok)
      failures.push_back(what);
  }
};

std::vector<std::string> qk_catalog() {
  std::vector<std::string> out;
  for (const std::string &name : catalog_names()) {
    const CatalogEntry e = catalog(name);
    if (e.pair.j && is_qk_chern_flat(e.pair.algebra, *e.pair.j).holds)
      out.push_back(name);
  }
  return out;
}

// Only the listed (a, b, c) constants with a < b may be nonzero.
bool constants_exactly(const ComplexSplitting &s,
                       const std::function<Scalar(std::size_t, std::size_t,
                                                  std::size_t)> &want) {
  const std::size_t n = 2 * s.half_dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (s.constant(a, b, c) != want(a, b, c))
          return false;
  return true;
}

// sum_r c_{ij}^{rbar} c_{rbar kbar}^{l} = 0 for all i, j, k, l.
bool quadratic_relations(const ComplexSplitting &s) {
  const std::size_t m = s.half_dim(), n = 2 * m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar sum;
          for (std::size_t r = 0; r < m; ++r)
            sum += s.constant(i, j, m + r) * s.constant(m + r, m + k, l);
          if (!sum.is_zero())
            return false;
        }
  return true;
}

InvariantForm sum_of_types(const ComplexSplitting &s, const InvariantForm &f) {
  return type_component(s, f, TypeOperator::A) +
         type_component(s, f, TypeOperator::Del) +
         type_component(s, f, TypeOperator::DelBar) +
         type_component(s, f, TypeOperator::ABar);
}

bool in_span(const std::vector<Matrix> &basis, const Matrix &m) {
  std::vector<Vector> cols;
  for (const Matrix &b : basis)
    cols.push_back(flatten(b));
  const std::size_t len = flatten(m).size();
  const std::size_t before =
      cols.empty() ? 0 : rank(Matrix::from_columns(cols, len));
  cols.push_back(flatten(m));
  return rank(Matrix::from_columns(cols, len)) == before;
}

void criterion1(Check &c) {
  const LoadedAlgebra in = load_algebra("@iwasawa_j3");
  const LieAlgebra &g = in.pair.algebra;
  const AlmostComplexStructure &j = *in.pair.j;
  c.expect(jacobi_defect(g.constants()).empty(), "jacobi");
  c.expect(nilpotency_step(g) == 2, "2-step");
  c.expect(is_chern_flat(g, j).holds, "chern_flat");
  const QkChernFlatReport q = is_qk_chern_flat(g, j);
  c.expect(q.holds && q.via_brackets && q.via_forms && q.via_j,
           "qk_chern_flat sub-conditions");
  c.expect(check_center_j_invariant(g, j), "center J-invariant");
  const ComplexSplitting s = split(g, j);
  // [Z1,Z2] = 2 Zb3, [Zb1,Zb2] = 2 Z3, nothing else
  c.expect(constants_exactly(s,
                             [](std::size_t a, std::size_t b, std::size_t k) {
                               if (a == 0 && b == 1 && k == 5)
                                 return Scalar(2);
                               if (a == 3 && b == 4 && k == 2)
                                 return Scalar(2);
                               return Scalar();
                             }),
           "split brackets");
}

void criterion2(Check &c) {
  const LoadedAlgebra in = load_algebra("@iwasawa_j3");
  const ComplexSplitting s = split(in.pair.algebra, *in.pair.j);
  const InvariantForm w = kaehler_form(s, HermitianMetric::identity(3));
  const Matrix wm = two_form_matrix(s, w, inverse(iwasawa_to_e_frame()));
  // -e12 - e34 + e56
  Matrix want(6, 6);
  want(0, 1) = -1;
  want(2, 3) = -1;
  want(4, 5) = 1;
  want = want - want.transpose();
  c.expect(wm == want, "omega_3 coefficients");
}

void criterion3(Check &c) {
  const AlmostComplexLieAlgebra d = conjugate_complexification(heisenberg(3));
  const LoadedAlgebra iw = load_algebra("@iwasawa_j3");
  // X (x) 1 -> X_k, X (x) i -> X_{k+3}: the identity in these bases
  const IsomorphismReport r = verify_frame_isomorphism(
      d.algebra, d.j, iw.pair.algebra, iw.pair.j, Matrix::identity(6));
  c.expect(r.brackets, "brackets");
  c.expect(r.intertwines_j, "J intertwined");
  c.expect(r.holds, "isomorphism");
}

void criterion4(Check &c) {
  RandomSource rng(0xA4);
  for (int t = 0; t < 50; ++t) {
    const LieAlgebra h = rng.two_step_algebra(rng.integer(1, 6));
    const AlmostComplexLieAlgebra d = conjugate_complexification(h);
    const std::string tag = "trial " + std::to_string(t);
    c.expect(is_qk_chern_flat(d.algebra, *d.j).holds, tag + ": qk");
    const std::vector<Subspace> lcs = lower_central_series(d.algebra);
    c.expect(lcs.size() <= 3 && lcs.back().dim() == 0, tag + ": lcs");
    const ComplexSplitting s = split(d.algebra, *d.j);
    c.expect(two_step_certificate(s), tag + ": certificate");
    c.expect(quadratic_relations(s), tag + ": quadratic relations");
  }
}

void criterion5(Check &c) {
  RandomSource rng(0xA5);
  const CatalogEntry e = catalog("dim4_model");
  for (int t = 0; t < 100; ++t) {
    const ScrambledPair sp = scramble_frame(e.pair.algebra, *e.pair.j,
                                            rng.invertible(4, true, 3));
    const NormalForm nf = dim4_normal_form(sp.algebra, sp.j);
    // [Z1,Z2] = Zb3 and its conjugate [Zb1,Zb2] = Z3, all else zero
    c.expect(constants_exactly(nf.splitting,
                               [](std::size_t a, std::size_t b,
                                  std::size_t k) {
                                 if (a == 0 && b == 1 && k == 6)
                                   return Scalar(1);
                                 if (a == 4 && b == 5 && k == 2)
                                   return Scalar(1);
                                 return Scalar();
                               }),
             "trial " + std::to_string(t));
  }
}

void criterion6(Check &c) {
  RandomSource rng(0xA6);
  for (std::size_t m = 1; m <= 3; ++m) {
    const CatalogEntry e = catalog("centro1_model(" + std::to_string(m) + ")");
    const std::size_t n = 2 * m + 1;
    for (int t = 0; t < 50; ++t) {
      const std::string tag =
          "m=" + std::to_string(m) + " trial " + std::to_string(t);
      const ScrambledPair sp = scramble_frame(e.pair.algebra, *e.pair.j,
                                              rng.invertible(n, true, 2));
      const NormalForm nf = center_one_normal_form(sp.algebra, sp.j);
      c.expect(nf.splitting.half_dim() % 2 == 1, tag + ": odd dimension");
      c.expect(constants_exactly(nf.splitting,
                                 [n](std::size_t a, std::size_t b,
                                     std::size_t k) {
                                   // [Z_a,Z_b] = Zb_n, [Zb_a,Zb_b] = Z_n
                                   if (b < n - 1 && k == 2 * n - 1)
                                     return Scalar(1);
                                   if (a >= n && b < 2 * n - 1 &&
                                       k == n - 1)
                                     return Scalar(1);
                                   return Scalar();
                                 }),
               tag + ": brackets");
      const bool residual =
          nf.omega && nf.congruence &&
          nf.congruence->transpose() * *nf.omega * *nf.congruence -
                  omega_k(m) ==
              Matrix::zero(2 * m, 2 * m);
      c.expect(residual, tag + ": skew residual");
    }
  }
  // Omega_k^k = k! times the top form
  for (std::size_t k = 1; k <= 3; ++k) {
    InvariantForm omega(k);
    for (std::size_t i = 0; i < 2 * k; ++i)
      for (std::size_t j = i + 1; j < 2 * k; ++j)
        omega.add((1u << i) | (1u << j), 1);
    InvariantForm power = InvariantForm::constant(k, 1);
    for (std::size_t r = 0; r < k; ++r)
      power = wedge(power, omega);
    Rational fact = 1;
    for (std::size_t r = 2; r <= k; ++r)
      fact *= static_cast<long>(r);
    const InvariantForm::Mask top = (1u << (2 * k)) - 1;
    c.expect(power == InvariantForm::monomial(k, top, Scalar(fact)),
             "Omega_" + std::to_string(k) + " power");
  }
}

void criterion7(Check &c) {
  {
    const LoadedAlgebra iw = load_algebra("@iwasawa_j3");
    c.expect(deformation_space(iw.pair.algebra, *iw.pair.j).quotient_dim == 0,
             "iwasawa quotient");
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    const CatalogEntry e = catalog("centro1_model(" + std::to_string(m) + ")");
    c.expect(deformation_space(e.pair.algebra, *e.pair.j).quotient_dim == 0,
             "centro1_model(" + std::to_string(m) + ") quotient");
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    const AlmostComplexStructure j = AlmostComplexStructure::standard(2 * n);
    const DeformationSpace d = deformation_space(LieAlgebra::abelian(2 * n), j);
    c.expect(d.quotient_dim == 2 * n * n &&
                 d.quotient_dim == oracle::anticommutant_dim(j.matrix()),
             "abelian(" + std::to_string(2 * n) + ") quotient");
  }
  for (const std::string &name : qk_catalog()) {
    const CatalogEntry e = catalog(name);
    const DeformationSpace d = deformation_space(e.pair.algebra, *e.pair.j);
    bool inner_ok = true;
    for (const Matrix &a : d.inner_basis)
      inner_ok = inner_ok && in_span(d.kernel_basis, a);
    c.expect(inner_ok, name + ": inner in kernel");
  }
}

void lemma_on(Check &c, const ComplexSplitting &s, const std::string &tag) {
  const LemmaReport r = lemma_tosatti_space(s);
  c.expect(r.all_closed && !r.counterexample, tag + ": closed");
  c.expect(r.solutions.size() == r.solution_dim, tag + ": basis size");
  for (const InvariantForm &b : r.solutions) {
    const InvariantForm lhs = type_component(s, b, TypeOperator::DelBar) +
                              type_component(s, b.conj(), TypeOperator::A);
    c.expect(lhs.is_zero(), tag + ": solves the equation");
    c.expect(exterior_d(s, b).is_zero(), tag + ": d beta = 0");
  }
}

void criterion8(Check &c) {
  for (const std::string &name : qk_catalog()) {
    const CatalogEntry e = catalog(name);
    lemma_on(c, split(e.pair.algebra, *e.pair.j), name);
  }
  RandomSource rng(0xA8);
  for (int t = 0; t < 20; ++t) {
    const AlmostComplexLieAlgebra d =
        conjugate_complexification(rng.two_step_algebra(rng.integer(2, 6)));
    lemma_on(c, split(d.algebra, *d.j), "random " + std::to_string(t));
  }
}

void criterion9(Check &c) {
  RandomSource rng(0xA9);
  std::vector<std::string> with_j;
  for (const std::string &name : catalog_names())
    if (catalog(name).pair.j)
      with_j.push_back(name);
  for (int t = 0; t < 100; ++t) {
    const std::string &name =
        with_j[rng.integer(0, static_cast<long>(with_j.size()) - 1)];
    const CatalogEntry e = catalog(name);
    const ComplexSplitting s = split(e.pair.algebra, *e.pair.j);
    const InvariantForm f = rng.form(s.half_dim(), rng.integer(0, 4),
                                     rng.integer(1, 5));
    const InvariantForm df = exterior_d(s, f);
    c.expect(exterior_d(s, df).is_zero(), name + ": d d = 0");
    c.expect(sum_of_types(s, f) == df, name + ": type sum");
  }
  for (const std::string &name : qk_catalog()) {
    const CatalogEntry e = catalog(name);
    const ComplexSplitting s = split(e.pair.algebra, *e.pair.j);
    for (int t = 0; t < 20; ++t) {
      const InvariantForm w =
          kaehler_form(s, rng.hermitian_metric(s.half_dim()));
      c.expect(type_component(s, w, TypeOperator::DelBar).is_zero(),
               name + ": delbar omega");
      c.expect(type_component(s, w, TypeOperator::Del).is_zero(),
               name + ": del omega");
    }
  }
}

void criterion10(Check &c) {
  const LoadedAlgebra ch = load_algebra("@complex_heisenberg_bicomplex");
  const LieAlgebra &g = ch.pair.algebra;
  const AlmostComplexStructure &j = *ch.pair.j;
  c.expect(is_chern_flat(g, j).holds, "chern_flat");
  c.expect(!is_qk_chern_flat(g, j).holds, "not qk_chern_flat");
  c.expect(!is_quasi_kaehler(split(g, j), HermitianMetric::identity(3)),
           "not quasi-Kaehler");
  c.expect(is_integrable(g, j), "nijenhuis = 0");
  const LoadedAlgebra iw = load_algebra("@iwasawa_j3");
  c.expect(!is_integrable(iw.pair.algebra, *iw.pair.j),
           "iwasawa nijenhuis != 0");
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, void (*)(Check &)>> criteria = {
      {"Iwasawa fixture", criterion1},
      {"Kaehler form in the e-frame", criterion2},
      {"doubled h3 is isomorphic to Iwasawa", criterion3},
      {"forced 2-step nilpotency on 50 doubled algebras", criterion4},
      {"dim4 normal form on 100 scrambles", criterion5},
      {"center-one normal form on 150 scrambles", criterion6},
      {"deformation spaces", criterion7},
      {"(2,0) solutions are closed", criterion8},
      {"cochain soundness", criterion9},
      {"negative control", criterion10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(c);
    } catch (const Error &e) {
      c.failures.push_back(std::string("error ") + error_code_name(e.code()) +
                           ": " + e.what());
    } catch (const std::exception &e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s %2zu: %s (%.2fs)\n", ok ? "PASS" : "FAIL", k + 1,
                criteria[k].first, secs);
    for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i)
      std::printf("        %s\n", c.failures[i].c_str());
    if (c.failures.size() > 5)
      std::printf("        ... %zu more\n", c.failures.size() - 5);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
