#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace qkcf {

/// Exact rational number. GMP keeps mpq_class values canonical
/// (positive denominator, reduced) after every arithmetic operation.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational &q);

/// Complex number a + b i with a, b rational: the field Q(i).
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}
  GaussianRational(int v) : re_(v) {}
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational parse(std::string_view text);

  const Rational &re() const { return re_; }
  const Rational &im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// z * conj(z), always a non-negative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational &operator+=(const GaussianRational &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational &operator-=(const GaussianRational &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational &operator*=(const GaussianRational &o);
  GaussianRational &operator/=(const GaussianRational &o) {
    return *this *= o.inverse();
  }

  /// a -= b * c without temporaries for the real-only fast path.
  void sub_mul(const GaussianRational &b, const GaussianRational &c);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational &b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational &b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational &b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational &b) {
    return a /= b;
  }
  friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string str() const;

private:
  Rational re_{0};
  Rational im_{0};
};

using Scalar = GaussianRational;

inline GaussianRational conj(const GaussianRational &z) { return z.conj(); }

std::ostream &operator<<(std::ostream &os, const GaussianRational &z);

} // namespace qkcf
