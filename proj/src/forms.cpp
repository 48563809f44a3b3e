#include "qkcf/forms.hpp"

#include "qkcf/error.hpp"
#include "qkcf/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace qkcf {

using Mask = InvariantForm::Mask;

namespace {

Mask bit(std::size_t k) { return Mask{1} << k; }

void require_half_dim(std::size_t m) {
  if (m > InvariantForm::max_half_dim)
    throw Error(ErrorCode::InvalidParameter,
                "forms support complex dimension up to 15");
}

void require_same_space(const InvariantForm &a, const InvariantForm &b) {
  if (a.half_dim() != b.half_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "forms live on different coframes");
}

// d theta^c for every combined index c.
std::vector<InvariantForm> coframe_differentials(const ComplexSplitting &s) {
  const std::size_t m = s.half_dim(), n = 2 * m;
  std::vector<InvariantForm> d(n, InvariantForm(m));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector br = s.bracket(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (!br[c].is_zero())
          d[c].add(bit(a) | bit(b), -br[c]);
    }
  return d;
}

InvariantForm apply_d(const std::vector<InvariantForm> &dtheta,
                      const InvariantForm &f) {
  InvariantForm out(f.half_dim());
  for (const auto &[mask, coef] : f.terms()) {
    int position = 0;
    for (Mask rest = mask; rest; rest &= rest - 1, ++position) {
      const std::size_t c = std::countr_zero(rest);
      const Mask prefix = mask & (bit(c) - 1);
      const Mask suffix = mask & ~(bit(c + 1) - 1);
      const int outer = (position % 2 == 0) ? 1 : -1;
      for (const auto &[pair, dc] : dtheta[c].terms()) {
        if (pair & (prefix | suffix))
          continue;
        const int sign =
            outer * wedge_sign(prefix, pair) * wedge_sign(prefix | pair, suffix);
        Scalar v = coef * dc;
        out.add(prefix | pair | suffix, sign > 0 ? v : -v);
      }
    }
  }
  return out;
}

std::pair<int, int> shift_of(TypeOperator op) {
  switch (op) {
  case TypeOperator::A:
    return {2, -1};
  case TypeOperator::Del:
    return {1, 0};
  case TypeOperator::DelBar:
    return {0, 1};
  case TypeOperator::ABar:
    return {-1, 2};
  }
  return {0, 0};
}

std::string factor_name(std::size_t k, const FormNaming &naming) {
  const std::size_t m = naming.half_dim, l = naming.central_from;
  const bool barred = k >= m;
  const std::size_t idx = barred ? k - m : k;
  const bool central = idx >= l;
  std::string name = central ? "n" : "z";
  if (barred)
    name += "b";
  return name + std::to_string(central ? idx - l + 1 : idx + 1);
}

std::size_t parse_factor(std::string_view tok, const FormNaming &naming) {
  std::size_t pos = 0;
  if (tok.empty() || (tok[0] != 'z' && tok[0] != 'n'))
    throw Error(ErrorCode::Parse, "bad coframe factor '" + std::string(tok) +
                                      "'");
  const bool central = tok[0] == 'n';
  pos = 1;
  bool barred = false;
  if (pos < tok.size() && tok[pos] == 'b') {
    barred = true;
    ++pos;
  }
  std::string_view digits = tok.substr(pos);
  if (digits.empty())
    throw Error(ErrorCode::Parse, "missing coframe index in '" +
                                      std::string(tok) + "'");
  std::size_t idx = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw Error(ErrorCode::Parse, "bad coframe index in '" +
                                        std::string(tok) + "'");
    idx = idx * 10 + static_cast<std::size_t>(ch - '0');
  }
  if (idx == 0)
    throw Error(ErrorCode::Parse, "coframe indices are 1-based");
  const std::size_t m = naming.half_dim, l = naming.central_from;
  std::size_t k = central ? l + idx - 1 : idx - 1;
  if ((central && k >= m) || (!central && k >= l))
    throw Error(ErrorCode::IndexRange,
                "coframe index out of range in '" + std::string(tok) + "'");
  return barred ? m + k : k;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

int wedge_sign(Mask a, Mask b) {
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const std::size_t y = std::countr_zero(rest);
    inversions += std::popcount(a >> (y + 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

InvariantForm::InvariantForm(std::size_t half_dim) : m_(half_dim) {
  require_half_dim(half_dim);
}

InvariantForm InvariantForm::constant(std::size_t half_dim, Scalar value) {
  return monomial(half_dim, 0, std::move(value));
}

InvariantForm InvariantForm::coframe(std::size_t half_dim, std::size_t k) {
  if (k >= 2 * half_dim)
    throw Error(ErrorCode::IndexRange, "coframe index out of range");
  return monomial(half_dim, bit(k), 1);
}

InvariantForm InvariantForm::monomial(std::size_t half_dim, Mask mask,
                                      Scalar value) {
  InvariantForm f(half_dim);
  if (mask >> (2 * half_dim))
    throw Error(ErrorCode::IndexRange, "monomial outside the coframe");
  f.add(mask, value);
  return f;
}

Scalar InvariantForm::coefficient(Mask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar() : it->second;
}

void InvariantForm::add(Mask mask, const Scalar &value) {
  if (value.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(mask, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

std::pair<std::size_t, std::size_t> InvariantForm::bidegree(Mask mask) const {
  const Mask low = mask & (bit(m_) - 1);
  return {static_cast<std::size_t>(std::popcount(low)),
          static_cast<std::size_t>(std::popcount(mask >> m_))};
}

InvariantForm InvariantForm::component(std::size_t p, std::size_t q) const {
  InvariantForm out(m_);
  for (const auto &[mask, coef] : terms_)
    if (bidegree(mask) == std::pair{p, q})
      out.terms_.emplace(mask, coef);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
InvariantForm::bidegrees() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto &[mask, coef] : terms_) {
    auto pq = bidegree(mask);
    if (std::find(out.begin(), out.end(), pq) == out.end())
      out.push_back(pq);
  }
  std::sort(out.begin(), out.end());
  return out;
}

InvariantForm InvariantForm::conj() const {
  InvariantForm out(m_);
  for (const auto &[mask, coef] : terms_) {
    Mask image = 0;
    int sign = 1;
    for (Mask rest = mask; rest; rest &= rest - 1) {
      const std::size_t k = std::countr_zero(rest);
      const std::size_t t = k < m_ ? k + m_ : k - m_;
      sign *= wedge_sign(image, bit(t));
      image |= bit(t);
    }
    Scalar c = coef.conj();
    out.add(image, sign > 0 ? c : -c);
  }
  return out;
}

InvariantForm &InvariantForm::operator+=(const InvariantForm &o) {
  require_same_space(*this, o);
  for (const auto &[mask, coef] : o.terms_)
    add(mask, coef);
  return *this;
}

InvariantForm &InvariantForm::operator-=(const InvariantForm &o) {
  require_same_space(*this, o);
  for (const auto &[mask, coef] : o.terms_)
    add(mask, -coef);
  return *this;
}

InvariantForm &InvariantForm::operator*=(const Scalar &s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[mask, coef] : terms_)
    coef *= s;
  return *this;
}

InvariantForm wedge(const InvariantForm &a, const InvariantForm &b) {
  require_same_space(a, b);
  InvariantForm out(a.half_dim());
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms()) {
      if (ma & mb)
        continue;
      Scalar v = ca * cb;
      out.add(ma | mb, wedge_sign(ma, mb) > 0 ? v : -v);
    }
  return out;
}

Scalar evaluate(const InvariantForm &form, std::span<const Scalar> u,
                std::span<const Scalar> v) {
  const std::size_t n = 2 * form.half_dim();
  if (u.size() != n || v.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "vector length for evaluation");
  Scalar out;
  for (const auto &[mask, coef] : form.terms()) {
    if (std::popcount(mask) != 2)
      continue;
    const std::size_t a = std::countr_zero(mask);
    const std::size_t b = std::countr_zero(mask & (mask - 1));
    out += coef * (u[a] * v[b] - u[b] * v[a]);
  }
  return out;
}

Matrix two_form_matrix(const ComplexSplitting &s, const InvariantForm &form,
                       const Matrix &real_basis) {
  std::vector<Vector> coords;
  for (const auto &col : real_basis.columns())
    coords.push_back(s.basis_inverse() * col);
  const std::size_t k = coords.size();
  Matrix out(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (a != b)
        out(a, b) = evaluate(form, coords[a], coords[b]);
  return out;
}

InvariantForm exterior_d(const ComplexSplitting &s, const InvariantForm &f) {
  if (f.half_dim() != s.half_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "form is not written in this splitting's coframe");
  return apply_d(coframe_differentials(s), f);
}

const char *type_operator_name(TypeOperator op) {
  switch (op) {
  case TypeOperator::A:
    return "A";
  case TypeOperator::Del:
    return "del";
  case TypeOperator::DelBar:
    return "delbar";
  case TypeOperator::ABar:
    return "Abar";
  }
  return "?";
}

InvariantForm type_component(const ComplexSplitting &s, const InvariantForm &f,
                             TypeOperator op) {
  if (f.half_dim() != s.half_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "form is not written in this splitting's coframe");
  const auto dtheta = coframe_differentials(s);
  const auto [dp, dq] = shift_of(op);
  InvariantForm out(f.half_dim());
  for (auto [p, q] : f.bidegrees()) {
    const long tp = static_cast<long>(p) + dp, tq = static_cast<long>(q) + dq;
    if (tp < 0 || tq < 0)
      continue;
    out += apply_d(dtheta, f.component(p, q))
               .component(static_cast<std::size_t>(tp),
                          static_cast<std::size_t>(tq));
  }
  return out;
}

HermitianMetric::HermitianMetric(Matrix h) : h_(std::move(h)) {
  if (!h_.is_square())
    throw Error(ErrorCode::InvalidParameter, "metric matrix must be square");
  if (!(h_ == h_.adjoint()))
    throw Error(ErrorCode::InvalidParameter, "metric matrix is not Hermitian");
  for (std::size_t k = 1; k <= h_.rows(); ++k) {
    Matrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        minor(r, c) = h_(r, c);
    const Scalar det = determinant(minor);
    if (!det.is_real() || sgn(det.re()) <= 0)
      throw Error(ErrorCode::InvalidParameter,
                  "metric matrix is not positive definite");
  }
}

HermitianMetric HermitianMetric::identity(std::size_t half_dim) {
  return HermitianMetric(Matrix::identity(half_dim));
}

InvariantForm kaehler_form(const ComplexSplitting &s,
                           const HermitianMetric &h) {
  const std::size_t m = s.half_dim();
  if (h.half_dim() != m)
    throw Error(ErrorCode::DimensionMismatch, "metric size does not match");
  const Scalar two_i(Rational(0), Rational(2));
  InvariantForm omega(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      omega.add(bit(j) | bit(m + k), two_i * h.matrix()(j, k));
  return omega;
}

bool is_quasi_kaehler(const ComplexSplitting &s, const HermitianMetric &h) {
  return type_component(s, kaehler_form(s, h), TypeOperator::DelBar)
      .is_zero();
}

LemmaReport lemma_tosatti_space(const ComplexSplitting &s) {
  if (!s.has_qk_shape())
    throw Error(ErrorCode::PreconditionViolated,
                "lemma solver needs a quasi-Kaehler Chern-flat frame");
  const std::size_t m = s.half_dim();
  std::vector<Mask> pairs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      pairs.push_back(bit(a) | bit(b));

  // Unknown 2p is Re b_p, 2p+1 is Im b_p, for beta = sum b_p zeta^{pair_p}.
  const std::size_t unknowns = 2 * pairs.size();
  std::vector<InvariantForm> images;
  for (std::size_t u = 0; u < unknowns; ++u) {
    const Scalar coef = (u % 2 == 0) ? Scalar(1) : Scalar::i();
    auto beta = InvariantForm::monomial(m, pairs[u / 2], coef);
    images.push_back(type_component(s, beta, TypeOperator::DelBar) +
                     type_component(s, beta.conj(), TypeOperator::A));
  }
  std::map<Mask, std::size_t> row_of;
  for (const auto &img : images)
    for (const auto &[mask, coef] : img.terms())
      row_of.try_emplace(mask, 0);
  std::size_t next = 0;
  for (auto &[mask, row] : row_of)
    row = next++;
  Matrix system(2 * row_of.size(), unknowns);
  for (std::size_t u = 0; u < unknowns; ++u)
    for (const auto &[mask, coef] : images[u].terms()) {
      const std::size_t r = row_of[mask];
      system(2 * r, u) = coef.re();
      system(2 * r + 1, u) = coef.im();
    }

  LemmaReport report;
  report.unknowns = unknowns;
  const auto kernel = unknowns ? kernel_basis(system) : std::vector<Vector>{};
  report.solution_dim = kernel.size();
  report.all_closed = true;
  for (const auto &v : kernel) {
    InvariantForm beta(m);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      beta.add(pairs[p], Scalar(v[2 * p].re(), v[2 * p + 1].re()));
    if (!exterior_d(s, beta).is_zero() && report.all_closed) {
      report.all_closed = false;
      report.counterexample = beta;
    }
    report.solutions.push_back(std::move(beta));
  }
  return report;
}

std::string to_string(const InvariantForm &f, const FormNaming &naming) {
  if (f.is_zero())
    return "0";
  std::string out;
  for (const auto &[mask, coef] : f.terms()) {
    if (!out.empty())
      out += " + ";
    out += coef.str() + " * ";
    if (mask == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (Mask rest = mask; rest; rest &= rest - 1) {
      if (!first)
        out += "^";
      out += factor_name(std::countr_zero(rest), naming);
      first = false;
    }
  }
  return out;
}

std::string to_string(const InvariantForm &f) {
  return to_string(f, FormNaming(f.half_dim()));
}

InvariantForm parse_form(std::string_view text, const FormNaming &naming) {
  InvariantForm out(naming.half_dim);
  std::string_view s = trim(text);
  if (s == "0")
    return out;
  while (!s.empty()) {
    std::size_t plus = s.find(" + ");
    std::string_view term = trim(s.substr(0, plus));
    s = plus == std::string_view::npos ? std::string_view{}
                                       : s.substr(plus + 3);
    std::size_t star = term.find(" * ");
    if (star == std::string_view::npos)
      throw Error(ErrorCode::Parse, "form term needs 'coeff * factors': '" +
                                        std::string(term) + "'");
    Scalar coef = Scalar::parse(term.substr(0, star));
    std::string_view factors = trim(term.substr(star + 3));
    if (factors == "1") {
      out.add(0, coef);
      continue;
    }
    Mask mask = 0;
    int sign = 1;
    bool repeated = false;
    while (!factors.empty()) {
      std::size_t caret = factors.find('^');
      std::size_t k = parse_factor(trim(factors.substr(0, caret)), naming);
      factors = caret == std::string_view::npos ? std::string_view{}
                                                : factors.substr(caret + 1);
      if (mask & bit(k))
        repeated = true;
      sign *= wedge_sign(mask, bit(k));
      mask |= bit(k);
    }
    if (!repeated)
      out.add(mask, sign > 0 ? coef : -coef);
  }
  return out;
}

} // namespace qkcf
