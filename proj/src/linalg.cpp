#include "qkcf/linalg.hpp"

#include "qkcf/error.hpp"

#include <utility>

namespace qkcf {

namespace {

// Element of Z[i]. Only what Bareiss needs.
struct GaussInt {
  mpz_class re, im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt &a, const GaussInt &b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// (a*d - b*c) / e, exact in Z[i] by the Bareiss identity.
GaussInt bareiss_update(const GaussInt &a, const GaussInt &d,
                        const GaussInt &b, const GaussInt &c,
                        const GaussInt &e) {
  GaussInt ad = mul(a, d), bc = mul(b, c);
  GaussInt num{ad.re - bc.re, ad.im - bc.im};
  if (sgn(e.im) == 0) {
    mpz_divexact(num.re.get_mpz_t(), num.re.get_mpz_t(), e.re.get_mpz_t());
    mpz_divexact(num.im.get_mpz_t(), num.im.get_mpz_t(), e.re.get_mpz_t());
    return num;
  }
  // num / e = num * conj(e) / |e|^2
  mpz_class n2 = e.re * e.re + e.im * e.im;
  GaussInt q = mul(num, GaussInt{e.re, -e.im});
  mpz_divexact(q.re.get_mpz_t(), q.re.get_mpz_t(), n2.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), q.im.get_mpz_t(), n2.get_mpz_t());
  return q;
}

struct ClearedMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<GaussInt> a;
  // Product of the row multipliers used to clear denominators.
  mpz_class scale = 1;

  GaussInt &at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

ClearedMatrix clear_denominators(const Matrix &m) {
  ClearedMatrix out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.a.resize(out.rows * out.cols);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (const auto &z : m.row(r)) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.im().get_den_mpz_t());
    }
    out.scale *= l;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar &z = m(r, c);
      out.at(r, c) = {z.re().get_num() * (l / z.re().get_den()),
                      z.im().get_num() * (l / z.im().get_den())};
    }
  }
  return out;
}

struct BareissResult {
  std::size_t rank = 0;
  GaussInt last_pivot{1, 0};
  bool odd_swaps = false;
};

BareissResult bareiss(ClearedMatrix &m) {
  BareissResult res;
  GaussInt prev{1, 0};
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && m.at(p, col).is_zero())
      ++p;
    if (p == m.rows)
      continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols; ++c)
        std::swap(m.at(p, c), m.at(row, c));
      res.odd_swaps = !res.odd_swaps;
    }
    const GaussInt pivot = m.at(row, col);
    for (std::size_t i = row + 1; i < m.rows; ++i) {
      const GaussInt lead = m.at(i, col);
      for (std::size_t j = col + 1; j < m.cols; ++j)
        m.at(i, j) = bareiss_update(pivot, m.at(i, j), lead, m.at(row, j),
                                    prev);
      m.at(i, col) = {0, 0};
    }
    prev = pivot;
    ++row;
  }
  res.rank = row;
  res.last_pivot = prev;
  return res;
}

} // namespace

std::size_t rank(const Matrix &m) {
  ClearedMatrix c = clear_denominators(m);
  return bareiss(c).rank;
}

Scalar determinant(const Matrix &m) {
  if (!m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square");
  if (m.rows() == 0)
    return 1;
  ClearedMatrix c = clear_denominators(m);
  BareissResult r = bareiss(c);
  if (r.rank < m.rows())
    return 0;
  Rational re(r.last_pivot.re, c.scale), im(r.last_pivot.im, c.scale);
  re.canonicalize();
  im.canonicalize();
  Scalar det(std::move(re), std::move(im));
  return r.odd_swaps ? -det : det;
}

Echelon reduce(const Matrix &m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.emplace_back(m.row(r).begin(), m.row(r).end());

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  std::vector<std::size_t> support;
  for (std::size_t col = 0; col < m.cols() && row < rows.size(); ++col) {
    std::size_t p = row;
    while (p < rows.size() && rows[p][col].is_zero())
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[p], rows[row]);

    Vector &prow = rows[row];
    const Scalar inv = prow[col].inverse();
    support.clear();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!prow[j].is_zero()) {
        prow[j] *= inv;
        support.push_back(j);
      }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == row || rows[i][col].is_zero())
        continue;
      const Scalar f = rows[i][col];
      for (std::size_t j : support)
        rows[i][j].sub_mul(f, prow[j]);
    }
    pivots.push_back(col);
    ++row;
  }
  return {Matrix::from_rows(rows, m.cols()), std::move(pivots)};
}

std::vector<Vector> kernel_basis(const Matrix &m) {
  Echelon e = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
      v[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix &m, const Matrix &b) {
  if (b.rows() != m.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "right-hand side row count does not match");
  Echelon e = reduce(hstack(m, b));
  for (auto p : e.pivots)
    if (p >= m.cols())
      return std::nullopt;
  Matrix x(m.cols(), b.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t c = 0; c < b.cols(); ++c)
      x(e.pivots[k], c) = e.reduced(k, m.cols() + c);
  return x;
}

Matrix inverse(const Matrix &m) {
  if (!m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  Echelon e = reduce(hstack(m, Matrix::identity(m.rows())));
  if (e.rank() < m.rows() || e.pivots[m.rows() - 1] >= m.cols())
    throw Error(ErrorCode::Singular, "matrix is singular");
  Matrix inv(m.rows(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.rows(); ++c)
      inv(r, c) = e.reduced(r, m.cols() + c);
  return inv;
}

std::optional<Vector> coordinates(const Matrix &basis,
                                  std::span<const Scalar> v) {
  auto x = solve(basis, Matrix::column_vector(v));
  if (!x)
    return std::nullopt;
  return x->column(0);
}

std::vector<Vector> independent_subset(std::span<const Vector> vectors,
                                       std::size_t dim) {
  if (vectors.empty())
    return {};
  Echelon e = reduce(Matrix::from_columns(vectors, dim));
  std::vector<Vector> out;
  for (auto p : e.pivots)
    out.push_back(vectors[p]);
  return out;
}

} // namespace qkcf
