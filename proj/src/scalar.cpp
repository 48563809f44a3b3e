#include "qkcf/scalar.hpp"

#include "qkcf/error.hpp"

#include <cctype>

namespace qkcf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_scalar(std::string_view text) {
  throw Error(ErrorCode::Parse,
              "malformed scalar '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    bad_scalar(text);
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorCode::Parse,
                "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational &q) { return q.get_str(10); }

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty())
    bad_scalar(text);
  if (s.back() != 'i')
    return GaussianRational(parse_rational(s));

  s.remove_suffix(1);
  if (!s.empty() && s.back() == '*')
    s.remove_suffix(1);

  // Split "re+im" / "re-im" at the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_text, im_text = s;
  if (split != std::string_view::npos) {
    re_text = s.substr(0, split);
    im_text = s.substr(split);
  }
  Rational im;
  if (im_text.empty() || im_text == "+")
    im = 1;
  else if (im_text == "-")
    im = -1;
  else
    im = parse_rational(im_text);
  Rational re = re_text.empty() ? Rational(0) : parse_rational(re_text);
  return {re, im};
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0)
    throw Error(ErrorCode::Singular, "division by zero in Q(i)");
  return {re_ / n, -im_ / n};
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void GaussianRational::sub_mul(const GaussianRational &b,
                               const GaussianRational &c) {
  if (sgn(b.im_) == 0 && sgn(c.im_) == 0) {
    re_ -= b.re_ * c.re_;
    return;
  }
  *this -= b * c;
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0)
    return to_string(re_);
  std::string imag = to_string(im_) + "*i";
  if (sgn(re_) == 0)
    return imag;
  return to_string(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &z) {
  return os << z.str();
}

const char *error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::Parse:
    return "parse";
  case ErrorCode::DimensionMismatch:
    return "dimension-mismatch";
  case ErrorCode::Singular:
    return "singular";
  case ErrorCode::IndexOrder:
    return "index-order";
  case ErrorCode::IndexRange:
    return "index-range";
  case ErrorCode::DuplicatePair:
    return "duplicate-pair";
  case ErrorCode::JacobiFailure:
    return "jacobi-failure";
  case ErrorCode::ComplexCoefficientInRealAlgebra:
    return "complex-coefficient";
  case ErrorCode::OddDimension:
    return "odd-dimension";
  case ErrorCode::NotAlmostComplex:
    return "not-almost-complex";
  case ErrorCode::UnknownCatalogName:
    return "unknown-catalog-name";
  case ErrorCode::InvalidParameter:
    return "invalid-parameter";
  case ErrorCode::PreconditionViolated:
    return "precondition-violated";
  case ErrorCode::NotTwoStepNilpotent:
    return "not-two-step-nilpotent";
  case ErrorCode::IntegrableStructure:
    return "integrable-structure";
  case ErrorCode::Degenerate:
    return "degenerate";
  case ErrorCode::InternalInconsistency:
    return "internal-inconsistency";
  }
  return "unknown";
}

} // namespace qkcf
