#include "qkcf/almost_complex.hpp"

#include "qkcf/error.hpp"
#include "qkcf/forms.hpp"
#include "qkcf/linalg.hpp"

#include <sstream>

namespace qkcf {

namespace {

void require_compatible(const LieAlgebra &g, const AlmostComplexStructure &j) {
  if (g.dim() != j.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "almost complex structure size does not match the algebra");
  if (g.field() != Field::Rational)
    throw Error(ErrorCode::InvalidParameter,
                "almost complex structures act on real forms (field Q)");
}

std::string pair_text(const char *lhs, std::size_t i, const char *rhs,
                      std::size_t j) {
  std::ostringstream os;
  os << '[' << lhs << i + 1 << ',' << rhs << j + 1 << ']';
  return os.str();
}

} // namespace

ComplexSplitting make_splitting(const LieAlgebra &g, Matrix frame) {
  const std::size_t n = g.dim(), m = n / 2;
  Matrix basis = hstack(frame, frame.conj());
  Matrix inv = inverse(basis);
  LieAlgebra complexified = change_basis(g, basis);
  return {m, std::move(frame), std::move(basis), std::move(inv),
          std::move(complexified)};
}

AlmostComplexStructure::AlmostComplexStructure(Matrix j) : j_(std::move(j)) {
  if (!j_.is_square())
    throw Error(ErrorCode::DimensionMismatch, "J must be square");
  if (j_.rows() % 2 != 0)
    throw Error(ErrorCode::OddDimension,
                "almost complex structure on an odd-dimensional space");
  if (!j_.is_real())
    throw Error(ErrorCode::NotAlmostComplex, "J must have rational entries");
  if (!(j_ * j_ == -Matrix::identity(j_.rows())))
    throw Error(ErrorCode::NotAlmostComplex, "J^2 != -I");
}

AlmostComplexStructure AlmostComplexStructure::standard(std::size_t dim) {
  if (dim % 2 != 0)
    throw Error(ErrorCode::OddDimension,
                "almost complex structure on an odd-dimensional space");
  const std::size_t m = dim / 2;
  Matrix j(dim, dim);
  for (std::size_t k = 0; k < m; ++k) {
    j(m + k, k) = 1;
    j(k, m + k) = -1;
  }
  return AlmostComplexStructure(std::move(j));
}

bool ComplexSplitting::has_qk_shape() const {
  const std::size_t m = m_;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b)
      if (!is_zero(bracket(a, m + b)))
        return false;
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t k = 0; k < m; ++k)
        if (!constant(a, b, k).is_zero())
          return false;
  }
  return true;
}

std::vector<Vector> adapted_basis(const AlmostComplexStructure &j) {
  const std::size_t n = j.dim();
  std::vector<Vector> xs, spanned;
  for (std::size_t k = 0; k < n && xs.size() < n / 2; ++k) {
    Vector e = unit_vector(n, k);
    if (!spanned.empty() && Subspace(n, spanned).contains(e))
      continue;
    spanned.push_back(e);
    spanned.push_back(j.apply(e));
    xs.push_back(std::move(e));
  }
  return xs;
}

ComplexSplitting split(const LieAlgebra &g, const AlmostComplexStructure &j) {
  require_compatible(g, j);
  const std::size_t n = g.dim(), m = n / 2;
  const auto xs = adapted_basis(j);
  Matrix frame(n, m);
  const Scalar minus_i = -Scalar::i();
  for (std::size_t k = 0; k < m; ++k) {
    Vector z = add(xs[k], scale(minus_i, j.apply(xs[k])));
    for (std::size_t r = 0; r < n; ++r)
      frame(r, k) = z[r];
  }
  return make_splitting(g, std::move(frame));
}

ComplexSplitting split_with_frame(const LieAlgebra &g,
                                  const AlmostComplexStructure &j,
                                  const Matrix &frame) {
  require_compatible(g, j);
  const std::size_t n = g.dim();
  if (frame.rows() != n || frame.cols() != n / 2)
    throw Error(ErrorCode::DimensionMismatch, "(1,0)-frame has wrong shape");
  if (!(j.matrix() * frame == Scalar::i() * frame))
    throw Error(ErrorCode::InvalidParameter,
                "frame vector is not of type (1,0)");
  if (rank(hstack(frame, frame.conj())) != n)
    throw Error(ErrorCode::InvalidParameter, "frame vectors are dependent");
  return make_splitting(g, frame);
}

StructureTensor nijenhuis(const LieAlgebra &g,
                          const AlmostComplexStructure &j) {
  require_compatible(g, j);
  const std::size_t n = g.dim();
  StructureTensor out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector x = unit_vector(n, a), y = unit_vector(n, b);
      const Vector jx = j.apply(x), jy = j.apply(y);
      Vector v = sub(g.bracket(jx, jy), g.bracket(x, y));
      v = sub(v, j.apply(g.bracket(jx, y)));
      v = sub(v, j.apply(g.bracket(x, jy)));
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero())
          out.set(a, b, k, v[k]);
    }

  // N = 0 iff [g^{1,0}, g^{1,0}] has no (0,1) part.
  const bool tensor_zero = out == StructureTensor(n);
  const ComplexSplitting s = split(g, j);
  const std::size_t m = s.half_dim();
  bool closed = true;
  for (std::size_t a = 0; a < m && closed; ++a)
    for (std::size_t b = a + 1; b < m && closed; ++b)
      for (std::size_t k = 0; k < m; ++k)
        if (!s.constant(a, b, m + k).is_zero()) {
          closed = false;
          break;
        }
  if (tensor_zero != closed)
    throw Error(ErrorCode::InternalInconsistency,
                "Nijenhuis tensor disagrees with the (1,0) bracket closure");
  return out;
}

bool is_integrable(const LieAlgebra &g, const AlmostComplexStructure &j) {
  return nijenhuis(g, j) == StructureTensor(g.dim());
}

ChernFlatReport is_chern_flat(const LieAlgebra &g,
                              const AlmostComplexStructure &j) {
  require_compatible(g, j);
  const std::size_t n = g.dim();
  ChernFlatReport report;

  const ComplexSplitting s = split(g, j);
  const std::size_t m = s.half_dim();
  std::optional<Witness> split_witness;
  for (std::size_t a = 0; a < m && !split_witness; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vector v = s.bracket(a, m + b);
      if (!is_zero(v)) {
        split_witness = Witness{a, b, std::move(v), pair_text("Z", a, "Zb", b)};
        break;
      }
    }
  report.via_splitting = !split_witness;

  std::optional<Witness> j_witness;
  for (std::size_t a = 0; a < n && !j_witness; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector x = unit_vector(n, a), y = unit_vector(n, b);
      Vector v = sub(g.bracket(j.apply(x), y), g.bracket(x, j.apply(y)));
      if (!is_zero(v)) {
        j_witness = Witness{a, b, std::move(v),
                            pair_text("[Je", a, ",e", b) + " != [e" +
                                std::to_string(a + 1) + ",Je" +
                                std::to_string(b + 1) + "]"};
        break;
      }
    }
  report.via_j = !j_witness;

  if (report.via_splitting != report.via_j)
    throw Error(ErrorCode::InternalInconsistency,
                "Chern-flat characterizations disagree");
  report.holds = report.via_splitting;
  report.witness = j_witness ? j_witness : split_witness;
  return report;
}

QkChernFlatReport is_qk_chern_flat(const LieAlgebra &g,
                                   const AlmostComplexStructure &j) {
  require_compatible(g, j);
  const std::size_t n = g.dim();
  QkChernFlatReport report;
  std::optional<Witness> witness;

  const ComplexSplitting s = split(g, j);
  const std::size_t m = s.half_dim();

  // (1) bracket shape on the splitting.
  bool ok1 = true;
  for (std::size_t a = 0; a < m && ok1; ++a)
    for (std::size_t b = 0; b < m && ok1; ++b) {
      Vector mixed = s.bracket(a, m + b);
      if (!is_zero(mixed)) {
        ok1 = false;
        witness = Witness{a, b, std::move(mixed), pair_text("Z", a, "Zb", b)};
        break;
      }
      if (b <= a)
        continue;
      Vector pure = s.bracket(a, b);
      for (std::size_t k = 0; k < m; ++k)
        if (!pure[k].is_zero()) {
          ok1 = false;
          witness = Witness{a, b, std::move(pure),
                            pair_text("Z", a, "Z", b) + " has a (1,0) part"};
          break;
        }
    }
  report.via_brackets = ok1;

  // (2) del and delbar vanish on the (1,0)-coframe.
  bool ok2 = true;
  for (std::size_t k = 0; k < m && ok2; ++k) {
    const auto zeta = InvariantForm::coframe(m, k);
    if (!type_component(s, zeta, TypeOperator::Del).is_zero() ||
        !type_component(s, zeta, TypeOperator::DelBar).is_zero())
      ok2 = false;
  }
  report.via_forms = ok2;

  // (3) J[X,Y] = -[JX,Y] = -[X,JY].
  bool ok3 = true;
  for (std::size_t a = 0; a < n && ok3; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector x = unit_vector(n, a), y = unit_vector(n, b);
      const Vector jxy = j.apply(g.bracket(x, y));
      Vector d1 = add(jxy, g.bracket(j.apply(x), y));
      Vector d2 = add(jxy, g.bracket(x, j.apply(y)));
      if (!is_zero(d1) || !is_zero(d2)) {
        ok3 = false;
        if (!witness)
          witness = Witness{a, b, is_zero(d1) ? std::move(d2) : std::move(d1),
                            "J[e" + std::to_string(a + 1) + ",e" +
                                std::to_string(b + 1) +
                                "] != -[Je,e] or -[e,Je]"};
        break;
      }
    }
  report.via_j = ok3;

  if (ok1 != ok2 || ok1 != ok3)
    throw Error(ErrorCode::InternalInconsistency,
                "quasi-Kaehler Chern-flat characterizations disagree");
  report.holds = ok1;
  if (!report.holds)
    report.witness = std::move(witness);
  return report;
}

bool check_center_j_invariant(const LieAlgebra &g,
                              const AlmostComplexStructure &j) {
  if (!is_chern_flat(g, j).holds)
    throw Error(ErrorCode::PreconditionViolated,
                "center J-invariance is only guaranteed for Chern-flat pairs");
  const Subspace z = center(g);
  for (const auto &v : z.basis())
    if (!z.contains(j.apply(v)))
      return false;
  return true;
}

bool two_step_certificate(const ComplexSplitting &s) {
  if (!s.has_qk_shape())
    throw Error(ErrorCode::PreconditionViolated,
                "two-step certificate needs a quasi-Kaehler Chern-flat frame");
  const std::size_t m = s.half_dim();
  bool relations = true;
  for (std::size_t i = 0; i < m && relations; ++i)
    for (std::size_t jj = i + 1; jj < m && relations; ++jj)
      for (std::size_t k = 0; k < m && relations; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Scalar sum;
          for (std::size_t r = 0; r < m; ++r) {
            const Scalar a = s.constant(i, jj, m + r);
            if (a.is_zero())
              continue;
            sum += a * s.constant(m + r, m + k, l);
          }
          if (!sum.is_zero()) {
            relations = false;
            break;
          }
        }
  auto step = nilpotency_step(s.complexified());
  const bool two_step = step && *step <= 2;
  if (relations != two_step)
    throw Error(ErrorCode::InternalInconsistency,
                "quadratic relations disagree with the lower central series");
  return relations;
}

std::size_t complex_center_dim(const LieAlgebra &g) {
  return center(g).dim() / 2;
}

} // namespace qkcf
