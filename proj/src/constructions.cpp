#include "qkcf/constructions.hpp"

#include "qkcf/error.hpp"
#include "qkcf/linalg.hpp"

#include <charconv>

namespace qkcf {

namespace {

struct ParsedName {
  std::string base;
  std::optional<std::size_t> param;
};

ParsedName parse_name(std::string_view name) {
  if (!name.empty() && name.front() == '@')
    name.remove_prefix(1);
  auto open = name.find('(');
  if (open == std::string_view::npos)
    return {std::string(name), std::nullopt};
  if (name.back() != ')')
    throw Error(ErrorCode::UnknownCatalogName,
                "malformed catalog name '" + std::string(name) + "'");
  std::string_view arg = name.substr(open + 1, name.size() - open - 2);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc() || ptr != arg.data() + arg.size())
    throw Error(ErrorCode::InvalidParameter,
                "catalog parameter must be a non-negative integer: '" +
                    std::string(arg) + "'");
  return {std::string(name.substr(0, open)), value};
}

std::size_t require_param(const ParsedName &p) {
  if (!p.param)
    throw Error(ErrorCode::InvalidParameter,
                "catalog entry '" + p.base + "' needs a parameter");
  return *p.param;
}

void forbid_param(const ParsedName &p) {
  if (p.param)
    throw Error(ErrorCode::InvalidParameter,
                "catalog entry '" + p.base + "' takes no parameter");
}

Vector bar_unit(std::size_t m, std::size_t k) { return unit_vector(m, k); }

Matrix iwasawa_j3_matrix() {
  // J X1 = X4, J X2 = X5, J X3 = X6, J X4 = -X1, ...
  return AlmostComplexStructure::standard(6).matrix();
}

LieAlgebra iwasawa_x_frame() {
  StructureTensor c(6);
  c.set(0, 1, 2, 1);  // [X1,X2] = X3
  c.set(3, 4, 2, -1); // [X4,X5] = -X3
  c.set(1, 3, 5, 1);  // [X2,X4] = X6
  c.set(4, 0, 5, 1);  // [X5,X1] = X6
  return LieAlgebra(std::move(c));
}

LieAlgebra elsa_frame() {
  StructureTensor c(6);
  c.set(0, 2, 4, -1); // [e1,e3] = -e5
  c.set(1, 3, 4, 1);  // [e2,e4] = e5
  c.set(0, 3, 5, -1); // [e1,e4] = -e6
  c.set(1, 2, 5, -1); // [e2,e3] = -e6
  return LieAlgebra(std::move(c));
}

} // namespace

AlmostComplexLieAlgebra conjugate_complexification(const LieAlgebra &h) {
  if (h.field() != Field::Rational)
    throw Error(ErrorCode::InvalidParameter,
                "conjugate complexification takes a real algebra");
  auto step = nilpotency_step(h);
  if (!step || *step > 2)
    throw Error(ErrorCode::NotTwoStepNilpotent,
                "conjugate complexification needs a 2-step nilpotent algebra");
  const std::size_t n = h.dim();
  StructureTensor c(2 * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar v = h.constant(a, b, k);
        if (v.is_zero())
          continue;
        c.set(a, b, k, v);          // [X(x)1, Y(x)1] = [X,Y](x)1
        c.set(n + a, n + b, k, -v); // [X(x)i, Y(x)i] = -[X,Y](x)1
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b)
        continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar v = h.constant(a, b, k);
        if (!v.is_zero())
          c.set(a, n + b, n + k, -v); // [X(x)1, Y(x)i] = -[X,Y](x)i
      }
    }
  return {LieAlgebra(std::move(c)), AlmostComplexStructure::standard(2 * n)};
}

AlmostComplexLieAlgebra realify_frame(std::size_t m,
                                      std::span<const FrameBracket> brackets) {
  const std::size_t n = 2 * m;
  StructureTensor complex(n);
  for (const auto &b : brackets) {
    if (b.i >= m || b.j >= m || b.coeffs.size() != m)
      throw Error(ErrorCode::IndexRange, "frame bracket index out of range");
    for (std::size_t k = 0; k < m; ++k) {
      if (b.coeffs[k].is_zero())
        continue;
      complex.set(b.i, b.j, m + k, b.coeffs[k]);
      complex.set(m + b.i, m + b.j, k, b.coeffs[k].conj());
    }
  }
  // x_k = (Z_k + Zb_k)/2, y_k = i (Z_k - Zb_k)/2 in combined coordinates.
  const Scalar half = Rational(1, 2);
  const Scalar half_i(Rational(0), Rational(1, 2));
  std::vector<Vector> real_basis(n, Vector(n));
  for (std::size_t k = 0; k < m; ++k) {
    real_basis[k][k] = half;
    real_basis[k][m + k] = half;
    real_basis[m + k][k] = half_i;
    real_basis[m + k][m + k] = -half_i;
  }
  // w = sum w_k Z_k + conj(w_k) Zb_k  ->  2 Re(w_k) x_k + 2 Im(w_k) y_k.
  StructureTensor c(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector w = complex.bracket(real_basis[a], real_basis[b]);
      for (std::size_t k = 0; k < m; ++k) {
        if (w[m + k] != w[k].conj())
          throw Error(ErrorCode::InternalInconsistency,
                      "realified bracket is not real");
        const Rational re = 2 * w[k].re(), im = 2 * w[k].im();
        if (sgn(re) != 0)
          c.set(a, b, k, Scalar(re));
        if (sgn(im) != 0)
          c.set(a, b, m + k, Scalar(im));
      }
    }
  return {LieAlgebra(std::move(c)), AlmostComplexStructure::standard(n)};
}

LieAlgebra heisenberg(std::size_t dim) {
  if (dim < 3 || dim % 2 == 0)
    throw Error(ErrorCode::InvalidParameter,
                "Heisenberg algebras have odd dimension 2m+1 >= 3");
  const std::size_t m = (dim - 1) / 2;
  StructureTensor c(dim);
  for (std::size_t k = 0; k < m; ++k)
    c.set(k, m + k, dim - 1, 1); // [X_k, Y_k] = Z
  return LieAlgebra(std::move(c));
}

CatalogEntry catalog(std::string_view name) {
  const ParsedName p = parse_name(name);
  const std::string canonical =
      p.param ? p.base + "(" + std::to_string(*p.param) + ")" : p.base;
  auto entry = [&](AlmostComplexLieAlgebra pair,
                   std::optional<AdvertisedVerdicts> v) {
    return CatalogEntry{canonical, std::move(pair), v};
  };
  constexpr AdvertisedVerdicts qk{true, true, false};

  if (p.base == "abelian") {
    const std::size_t n = require_param(p);
    if (n == 0)
      throw Error(ErrorCode::InvalidParameter, "abelian(0) is empty");
    auto g = LieAlgebra::abelian(n);
    if (n % 2 != 0)
      return entry({g, std::nullopt}, std::nullopt);
    return entry({g, AlmostComplexStructure::standard(n)},
                 AdvertisedVerdicts{true, true, true});
  }
  if (p.base == "heisenberg3") {
    forbid_param(p);
    return entry({heisenberg(3), std::nullopt}, std::nullopt);
  }
  if (p.base == "heisenberg")
    return entry({heisenberg(require_param(p)), std::nullopt}, std::nullopt);
  if (p.base == "iwasawa_j3") {
    forbid_param(p);
    return entry({iwasawa_x_frame(), AlmostComplexStructure(iwasawa_j3_matrix())},
                 qk);
  }
  if (p.base == "iwasawa_e_frame") {
    forbid_param(p);
    // J conjugated through iwasawa_to_e_frame():
    // J e1 = -e2, J e2 = e1, J e3 = -e4, J e4 = e3, J e5 = e6, J e6 = -e5.
    Matrix j(6, 6);
    j(1, 0) = -1;
    j(0, 1) = 1;
    j(3, 2) = -1;
    j(2, 3) = 1;
    j(5, 4) = 1;
    j(4, 5) = -1;
    return entry({elsa_frame(), AlmostComplexStructure(std::move(j))}, qk);
  }
  if (p.base == "complex_heisenberg_bicomplex") {
    forbid_param(p);
    // Complex Heisenberg [X,Y] = Z on X1..X3 = X,Y,Z and X4..X6 = iX,iY,iZ,
    // with J multiplication by i.
    StructureTensor c(6);
    c.set(0, 1, 2, 1);  // [X,Y] = Z
    c.set(0, 4, 5, 1);  // [X,iY] = iZ
    c.set(3, 1, 5, 1);  // [iX,Y] = iZ
    c.set(3, 4, 2, -1); // [iX,iY] = -Z
    return entry({LieAlgebra(std::move(c)), AlmostComplexStructure::standard(6)},
                 AdvertisedVerdicts{true, false, true});
  }
  if (p.base == "dim4_model") {
    forbid_param(p);
    const FrameBracket b[] = {{0, 1, bar_unit(4, 2)}};
    return entry(realify_frame(4, b), qk);
  }
  if (p.base == "dim5_irreducible") {
    forbid_param(p);
    const FrameBracket b[] = {{0, 1, bar_unit(5, 2)}, {1, 3, bar_unit(5, 4)}};
    return entry(realify_frame(5, b), qk);
  }
  if (p.base == "centro1_model") {
    const std::size_t k = require_param(p);
    if (k == 0)
      throw Error(ErrorCode::InvalidParameter, "centro1_model(m) needs m >= 1");
    const std::size_t n = 2 * k + 1;
    std::vector<FrameBracket> b;
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j + 1 < n; ++j)
        b.push_back({i, j, bar_unit(n, n - 1)});
    return entry(realify_frame(n, b), qk);
  }
  throw Error(ErrorCode::UnknownCatalogName,
              "unknown catalog entry '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"abelian(4)",       "abelian(6)",
          "heisenberg3",      "heisenberg(5)",
          "iwasawa_j3",       "iwasawa_e_frame",
          "complex_heisenberg_bicomplex",
          "dim4_model",       "dim5_irreducible",
          "centro1_model(1)", "centro1_model(2)",
          "centro1_model(3)"};
}

Matrix iwasawa_to_e_frame() {
  Matrix m(6, 6);
  m(0, 0) = 1;  // X1 -> e1
  m(3, 1) = 1;  // X2 -> e4
  m(5, 2) = -1; // X3 -> -e6
  m(1, 3) = -1; // X4 -> -e2
  m(2, 4) = 1;  // X5 -> e3
  m(4, 5) = 1;  // X6 -> e5
  return m;
}

Matrix iwasawa_to_e_frame_as_printed() {
  Matrix m(6, 6);
  m(0, 0) = 1;  // X1 -> e1
  m(3, 1) = 1;  // X2 -> e4
  m(4, 2) = 1;  // X3 -> e5
  m(1, 3) = -1; // X4 -> -e2
  m(2, 4) = 1;  // X5 -> e3
  m(5, 5) = 1;  // X6 -> e6
  return m;
}

IsomorphismReport verify_frame_isomorphism(
    const LieAlgebra &g1, const std::optional<AlmostComplexStructure> &j1,
    const LieAlgebra &g2, const std::optional<AlmostComplexStructure> &j2,
    const Matrix &map) {
  const std::size_t n = g1.dim();
  if (g2.dim() != n || map.rows() != n || map.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "isomorphism dimensions");
  if (rank(map) != n)
    throw Error(ErrorCode::Singular, "frame map is singular");
  if (j1.has_value() != j2.has_value())
    throw Error(ErrorCode::InvalidParameter,
                "supply J on both sides or on neither");

  IsomorphismReport report;
  report.brackets = true;
  for (std::size_t a = 0; a < n && report.brackets; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector lhs = map * g1.bracket_basis(a, b);
      const Vector rhs = g2.bracket(map.column(a), map.column(b));
      if (lhs != rhs) {
        report.brackets = false;
        report.witness = Witness{a, b, sub(lhs, rhs),
                                 "map[e" + std::to_string(a + 1) + ",e" +
                                     std::to_string(b + 1) +
                                     "] != [map e, map e]"};
        break;
      }
    }
  report.intertwines_j = true;
  if (j1) {
    const Matrix defect = map * j1->matrix() - j2->matrix() * map;
    if (!defect.is_zero()) {
      report.intertwines_j = false;
      for (std::size_t c = 0; c < n; ++c)
        if (!is_zero(defect.column(c))) {
          if (!report.witness)
            report.witness = Witness{c, c, defect.column(c),
                                     "map J e" + std::to_string(c + 1) +
                                         " != J map e" + std::to_string(c + 1)};
          break;
        }
    }
  }
  report.holds = report.brackets && report.intertwines_j;
  return report;
}

ScrambledPair scramble_frame(const LieAlgebra &g,
                             const AlmostComplexStructure &j,
                             const Matrix &p) {
  const ComplexSplitting s = split(g, j);
  const std::size_t m = s.half_dim(), n = 2 * m;
  if (p.rows() != m || p.cols() != m)
    throw Error(ErrorCode::DimensionMismatch, "frame change has wrong shape");
  if (rank(p) != m)
    throw Error(ErrorCode::Singular, "frame change is singular");
  const Matrix z = s.frame() * p;
  Matrix q(n, n);
  for (std::size_t k = 0; k < m; ++k) {
    Vector x(n);
    for (std::size_t r = 0; r < n; ++r)
      x[r] = z(r, k).re();
    const Vector jx = j.apply(x);
    for (std::size_t r = 0; r < n; ++r) {
      q(r, k) = x[r];
      q(r, m + k) = jx[r];
    }
  }
  LieAlgebra h = change_basis(g, q);
  AlmostComplexStructure jj(inverse(q) * j.matrix() * q);
  return {std::move(h), std::move(jj), std::move(q)};
}

} // namespace qkcf
