#include "qkcf/classify.hpp"

#include "qkcf/constructions.hpp"
#include "qkcf/error.hpp"
#include "qkcf/linalg.hpp"
#include "qkcf/random.hpp"

#include <sstream>

namespace qkcf {

namespace {

Scalar skew_eval(const Matrix &w, std::span<const Scalar> x,
                 std::span<const Scalar> y) {
  Scalar s;
  for (std::size_t r = 0; r < x.size(); ++r) {
    if (x[r].is_zero())
      continue;
    for (std::size_t c = 0; c < y.size(); ++c)
      if (!y[c].is_zero() && !w(r, c).is_zero())
        s += x[r] * w(r, c) * y[c];
  }
  return s;
}

// Columns u1, v1, u2, v2, ... with w(u_a, v_a) = 1 and all other pairings 0.
Matrix darboux_basis(const Matrix &w) {
  const std::size_t n = w.rows();
  std::vector<Vector> rest;
  for (std::size_t k = 0; k < n; ++k)
    rest.push_back(unit_vector(n, k));
  std::vector<Vector> out;
  while (!rest.empty()) {
    Vector u = rest.front();
    std::size_t partner = rest.size();
    Scalar pairing;
    for (std::size_t q = 1; q < rest.size(); ++q) {
      pairing = skew_eval(w, u, rest[q]);
      if (!pairing.is_zero()) {
        partner = q;
        break;
      }
    }
    if (partner == rest.size())
      throw Error(ErrorCode::Degenerate, "skew form is degenerate");
    Vector v = scale(pairing.inverse(), rest[partner]);
    std::vector<Vector> next;
    for (std::size_t q = 1; q < rest.size(); ++q) {
      if (q == partner)
        continue;
      Vector x = rest[q];
      const Scalar wv = skew_eval(w, rest[q], v);
      const Scalar wu = skew_eval(w, rest[q], u);
      axpy(x, -wv, u);
      axpy(x, wu, v);
      next.push_back(std::move(x));
    }
    out.push_back(std::move(u));
    out.push_back(std::move(v));
    rest = std::move(next);
  }
  return Matrix::from_columns(out, n);
}

void require_qk(const LieAlgebra &g, const AlmostComplexStructure &j) {
  const QkChernFlatReport r = is_qk_chern_flat(g, j);
  if (!r.holds)
    throw Error(ErrorCode::PreconditionViolated,
                "structure is not quasi-Kaehler Chern-flat");
}

// (0,1) coefficients of [Z_a, Z_b] in the frame of s.
Vector bar_part(const ComplexSplitting &s, std::size_t a, std::size_t b) {
  const std::size_t m = s.half_dim();
  const Vector full = s.bracket(a, b);
  return Vector(full.begin() + static_cast<std::ptrdiff_t>(m), full.end());
}

NormalForm finish(const LieAlgebra &g, const AlmostComplexStructure &j,
                  const ComplexSplitting &s, Matrix p,
                  std::vector<std::string> steps) {
  Matrix frame = s.frame() * p;
  ComplexSplitting ns = split_with_frame(g, j, frame);
  return {std::move(p), std::move(frame), std::move(ns), std::move(steps),
          std::nullopt, std::nullopt};
}

std::string pair_name(std::size_t a, std::size_t b) {
  return "[Z" + std::to_string(a + 1) + ",Z" + std::to_string(b + 1) + "]";
}

} // namespace

Matrix omega_k(std::size_t k) {
  const std::size_t n = 2 * k;
  Matrix w(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      w(r, c) = 1;
      w(c, r) = -1;
    }
  return w;
}

Matrix darboux_block(std::size_t k) {
  Matrix d(2 * k, 2 * k);
  for (std::size_t a = 0; a < k; ++a) {
    d(2 * a, 2 * a + 1) = 1;
    d(2 * a + 1, 2 * a) = -1;
  }
  return d;
}

Matrix skew_normal_form(const Matrix &omega) {
  if (!omega.is_square())
    throw Error(ErrorCode::DimensionMismatch, "skew form must be square");
  if (omega.rows() % 2 != 0)
    throw Error(ErrorCode::OddDimension, "skew form of odd size is degenerate");
  if (!(omega.transpose() == -omega))
    throw Error(ErrorCode::InvalidParameter, "matrix is not antisymmetric");
  const Matrix td = darboux_basis(omega);
  const Matrix s = darboux_basis(omega_k(omega.rows() / 2));
  return td * inverse(s);
}

StructureTensor dim4_model_constants() {
  const FrameBracket b[] = {{0, 1, unit_vector(4, 2)}};
  const AlmostComplexLieAlgebra model = realify_frame(4, b);
  return split(model.algebra, *model.j).complexified().constants();
}

StructureTensor center_one_model_constants(std::size_t n) {
  std::vector<FrameBracket> b;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = i + 1; k + 1 < n; ++k)
      b.push_back({i, k, unit_vector(n, n - 1)});
  const AlmostComplexLieAlgebra model = realify_frame(n, b);
  return split(model.algebra, *model.j).complexified().constants();
}

NormalForm dim4_normal_form(const LieAlgebra &g,
                            const AlmostComplexStructure &j) {
  require_qk(g, j);
  if (is_integrable(g, j))
    throw Error(ErrorCode::IntegrableStructure,
                "integrable J: the structure is not non-complex");
  if (g.dim() != 8)
    throw Error(ErrorCode::DimensionMismatch,
                "dim4 normal form needs complex dimension 4");
  const ComplexSplitting s = split(g, j);
  const std::size_t m = 4;
  std::vector<std::string> steps;

  std::size_t i0 = m, j0 = m;
  for (std::size_t a = 0; a < m && i0 == m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!is_zero(bar_part(s, a, b))) {
        i0 = a;
        j0 = b;
        break;
      }
  if (i0 == m)
    throw Error(ErrorCode::InternalInconsistency,
                "non-integrable J without a nonzero (1,0) bracket");
  const Vector c = bar_part(s, i0, j0);
  std::size_t r0 = m;
  for (std::size_t r = 0; r < m; ++r)
    if (r != i0 && r != j0 && !c[r].is_zero()) {
      r0 = r;
      break;
    }
  if (r0 == m)
    throw Error(ErrorCode::InternalInconsistency,
                "bracket lies in the conjugate span of its arguments");
  std::size_t l0 = 0;
  while (l0 == i0 || l0 == j0 || l0 == r0)
    ++l0;
  steps.push_back("first nonzero bracket " + pair_name(i0, j0) +
                  ", third vector from Z" + std::to_string(r0 + 1));

  // W1 = Z_i, W2 = Z_j, W3 = conj of [Z_i,Z_j], W4 = Z_l.
  Matrix p(m, m);
  p(i0, 0) = 1;
  p(j0, 1) = 1;
  for (std::size_t k = 0; k < m; ++k)
    p(k, 2) = c[k].conj();
  p(l0, 3) = 1;
  ComplexSplitting w = split_with_frame(g, j, s.frame() * p);

  const Vector unit3 = unit_vector(m, 2);
  if (bar_part(w, 0, 1) != unit3)
    throw Error(ErrorCode::InternalInconsistency, "rescaling failed");
  for (std::size_t a = 0; a < m; ++a)
    if (a != 2 && !is_zero(w.bracket(std::min(a, std::size_t{2}),
                                      std::max(a, std::size_t{2}))))
      throw Error(ErrorCode::InternalInconsistency, "Z3 is not central");
  steps.push_back("Z3 := conj[Z1,Z2] is central");

  const Vector b14 = bar_part(w, 0, 3), b24 = bar_part(w, 1, 3);
  for (std::size_t k = 0; k < m; ++k)
    if (k != 2 && (!b14[k].is_zero() || !b24[k].is_zero()))
      throw Error(ErrorCode::InternalInconsistency,
                  "[Z1,Z4] or [Z2,Z4] leaves span(Zb3)");
  const Scalar a = b14[2], bcoef = b24[2];
  // Z4 -> Z4 - a Z2 + b Z1 kills both.
  for (std::size_t k = 0; k < m; ++k)
    p(k, 3) = p(k, 3) - a * p(k, 1) + bcoef * p(k, 0);
  steps.push_back("Z4 := Z4 - (" + a.str() + ") Z2 + (" + bcoef.str() +
                  ") Z1");

  NormalForm out = finish(g, j, s, std::move(p), std::move(steps));
  if (!(out.splitting.complexified().constants() == dim4_model_constants()))
    throw Error(ErrorCode::InternalInconsistency,
                "dim4 reduction did not reach the model");
  return out;
}

NormalForm center_one_normal_form(const LieAlgebra &g,
                                  const AlmostComplexStructure &j) {
  require_qk(g, j);
  const Subspace z = center(g);
  if (z.dim() != 2)
    throw Error(ErrorCode::PreconditionViolated,
                "complex center is " + std::to_string(z.dim() / 2) +
                    "-dimensional, not 1");
  const ComplexSplitting s = split(g, j);
  const std::size_t m = s.half_dim();
  if (m % 2 == 0)
    throw Error(ErrorCode::PreconditionViolated,
                "even complex dimension with 1-dimensional center");
  std::vector<std::string> steps;

  // A = z - iJz in frame coordinates.
  const Vector zr = z.basis().front();
  Vector a = sub(zr, scale(Scalar::i(), j.apply(zr)));
  const Vector ac = s.basis_inverse() * a;
  Vector acoords(ac.begin(), ac.begin() + static_cast<std::ptrdiff_t>(m));
  for (std::size_t k = m; k < 2 * m; ++k)
    if (!ac[k].is_zero())
      throw Error(ErrorCode::InternalInconsistency, "A is not of type (1,0)");

  std::vector<Vector> chosen{acoords};
  std::vector<Vector> v;
  for (std::size_t k = 0; k < m && v.size() + 1 < m; ++k) {
    Vector e = unit_vector(m, k);
    if (Subspace(m, chosen).contains(e))
      continue;
    chosen.push_back(e);
    v.push_back(std::move(e));
  }
  const std::size_t r = m - 1;

  // Abar in combined coordinates.
  Vector abar(2 * m);
  std::size_t probe = 2 * m;
  for (std::size_t k = 0; k < m; ++k) {
    abar[m + k] = acoords[k].conj();
    if (probe == 2 * m && !abar[m + k].is_zero())
      probe = m + k;
  }
  const LieAlgebra &gc = s.complexified();
  auto lift = [&](const Vector &x) {
    Vector out(2 * m);
    std::copy(x.begin(), x.end(), out.begin());
    return out;
  };
  Matrix omega(r, r);
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = p + 1; q < r; ++q) {
      const Vector br = gc.bracket(lift(v[p]), lift(v[q]));
      const Scalar w = br[probe] / abar[probe];
      if (sub(br, scale(w, abar)) != zero_vector(2 * m))
        throw Error(ErrorCode::InternalInconsistency,
                    "bracket of complement is not a multiple of Abar");
      omega(p, q) = w;
      omega(q, p) = -w;
    }
  if (rank(omega) != r)
    throw Error(ErrorCode::PreconditionViolated,
                "skew form on the complement is degenerate");
  steps.push_back("A spans the (1,0) center, complement of dimension " +
                  std::to_string(r));
  Matrix t = skew_normal_form(omega);
  steps.push_back("skew form congruent to Omega_" + std::to_string(r / 2));

  Matrix p(m, m);
  for (std::size_t col = 0; col < r; ++col)
    for (std::size_t q = 0; q < r; ++q) {
      if (t(q, col).is_zero())
        continue;
      for (std::size_t k = 0; k < m; ++k)
        p(k, col) += t(q, col) * v[q][k];
    }
  for (std::size_t k = 0; k < m; ++k)
    p(k, m - 1) = acoords[k];

  NormalForm out = finish(g, j, s, std::move(p), std::move(steps));
  out.omega = std::move(omega);
  out.congruence = std::move(t);
  if (!(out.splitting.complexified().constants() ==
        center_one_model_constants(m)))
    throw Error(ErrorCode::InternalInconsistency,
                "center-one reduction did not reach the model");
  return out;
}

Fingerprint fingerprint(const LieAlgebra &g,
                        const std::optional<AlmostComplexStructure> &j) {
  Fingerprint f;
  f.dim = g.dim();
  f.center_dim = center(g).dim();
  f.derived_dim = derived_algebra(g).dim();
  if (j) {
    f.complex_center_dim = complex_center_dim(g);
    f.qk_chern_flat = is_qk_chern_flat(g, *j).holds;
    f.integrable = is_integrable(g, *j);
  }
  // Generic rank of ad over a fixed sample; max over 4 rational points.
  RandomSource rng(0x5eed);
  for (int t = 0; t < 4; ++t) {
    Vector x(g.dim());
    for (auto &e : x)
      e = Scalar(rng.rational(5));
    f.generic_ad_rank = std::max(f.generic_ad_rank, rank(g.ad(x)));
  }
  for (const Subspace &s : lower_central_series(g))
    f.lower_central_dims.push_back(s.dim());
  return f;
}

std::string to_string(const Fingerprint &f) {
  std::ostringstream os;
  auto opt_bool = [](const std::optional<bool> &b) {
    return b ? (*b ? "yes" : "no") : "-";
  };
  os << "dim=" << f.dim << " center=" << f.center_dim
     << " derived=" << f.derived_dim << " complex_center=";
  if (f.complex_center_dim)
    os << *f.complex_center_dim;
  else
    os << "-";
  os << " qk=" << opt_bool(f.qk_chern_flat)
     << " integrable=" << opt_bool(f.integrable)
     << " ad_rank=" << f.generic_ad_rank << " lcs=";
  for (std::size_t k = 0; k < f.lower_central_dims.size(); ++k)
    os << (k ? "," : "") << f.lower_central_dims[k];
  return os.str();
}

} // namespace qkcf
