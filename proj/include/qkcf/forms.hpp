#pragma once

#include "qkcf/almost_complex.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace qkcf {

/*
 * Left-invariant complex forms on g, written in the coframe dual to the
 * combined basis (Z_1..Z_m, Zb_1..Zb_m) of a ComplexSplitting:
 *
 *   theta^k = zeta_{k+1}        for k < m    (type (1,0))
 *   theta^k = zetabar_{k-m+1}   for k >= m   (type (0,1))
 *
 * A monomial theta^{i_1} ^ ... ^ theta^{i_r} with i_1 < ... < i_r is stored as
 * the bitmask of its indices, so a term's bidegree is (popcount of the low m
 * bits, popcount of the high m bits). Wedge products use
 * (a ^ b)(X,Y) = a(X) b(Y) - a(Y) b(X).
 */
class InvariantForm {
public:
  using Mask = std::uint32_t;
  static constexpr std::size_t max_half_dim = 15;

  explicit InvariantForm(std::size_t half_dim);

  static InvariantForm constant(std::size_t half_dim, Scalar value);
  /// theta^k in combined indexing.
  static InvariantForm coframe(std::size_t half_dim, std::size_t k);
  static InvariantForm monomial(std::size_t half_dim, Mask mask, Scalar value);

  std::size_t half_dim() const { return m_; }
  const std::map<Mask, Scalar> &terms() const { return terms_; }
  Scalar coefficient(Mask mask) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds value to the coefficient of `mask`, dropping it if it cancels.
  void add(Mask mask, const Scalar &value);

  std::pair<std::size_t, std::size_t> bidegree(Mask mask) const;
  /// Projection onto the (p,q) component.
  InvariantForm component(std::size_t p, std::size_t q) const;
  /// All (p,q) with a nonzero component.
  std::vector<std::pair<std::size_t, std::size_t>> bidegrees() const;

  InvariantForm conj() const;

  InvariantForm &operator+=(const InvariantForm &o);
  InvariantForm &operator-=(const InvariantForm &o);
  InvariantForm &operator*=(const Scalar &s);
  friend InvariantForm operator+(InvariantForm a, const InvariantForm &b) {
    return a += b;
  }
  friend InvariantForm operator-(InvariantForm a, const InvariantForm &b) {
    return a -= b;
  }
  friend InvariantForm operator*(const Scalar &s, InvariantForm a) {
    return a *= s;
  }
  friend bool operator==(const InvariantForm &,
                         const InvariantForm &) = default;

private:
  std::size_t m_;
  std::map<Mask, Scalar> terms_;
};

/// Sign (+1/-1) of concatenating sorted disjoint index sets a then b.
int wedge_sign(InvariantForm::Mask a, InvariantForm::Mask b);

InvariantForm wedge(const InvariantForm &a, const InvariantForm &b);

/// Value of a 2-form on two vectors given in combined-basis coordinates.
Scalar evaluate(const InvariantForm &form, std::span<const Scalar> u,
                std::span<const Scalar> v);

/// Antisymmetric matrix (form(b_a, b_b)) for real vectors b_a given as the
/// columns of `real_basis` (coordinates in the real basis of g).
Matrix two_form_matrix(const ComplexSplitting &s, const InvariantForm &form,
                       const Matrix &real_basis);

/// Chevalley-Eilenberg differential: d theta^c = -sum_{a<b} c_{ab}^c
/// theta^a ^ theta^b, extended as an antiderivation.
InvariantForm exterior_d(const ComplexSplitting &s, const InvariantForm &f);

/// d = A + del + delbar + Abar with bidegree shifts (2,-1), (1,0), (0,1),
/// (-1,2).
enum class TypeOperator { A, Del, DelBar, ABar };

const char *type_operator_name(TypeOperator op);

InvariantForm type_component(const ComplexSplitting &s, const InvariantForm &f,
                             TypeOperator op);

/// Hermitian positive-definite matrix h_{jk} in the (1,0)-coframe.
class HermitianMetric {
public:
  /// Throws Error(InvalidParameter) unless h is Hermitian with positive
  /// leading principal minors.
  explicit HermitianMetric(Matrix h);
  static HermitianMetric identity(std::size_t half_dim);

  std::size_t half_dim() const { return h_.rows(); }
  const Matrix &matrix() const { return h_; }

private:
  Matrix h_;
};

/// omega_h = 2i sum h_{jk} zeta_j ^ zetabar_k. With h = I the adapted real
/// basis x_k, J x_k is orthonormal and omega = g(J., .).
InvariantForm kaehler_form(const ComplexSplitting &s, const HermitianMetric &h);

/// delbar omega_h = 0.
bool is_quasi_kaehler(const ComplexSplitting &s, const HermitianMetric &h);

struct LemmaReport {
  std::size_t unknowns = 0;         // real dimension of the (2,0)-forms
  std::size_t solution_dim = 0;     // real dimension of the solution space
  std::vector<InvariantForm> solutions;
  bool all_closed = false;
  std::optional<InvariantForm> counterexample;
};

/// Solves delbar beta + A betabar = 0 over the (2,0)-forms beta, with real
/// and imaginary parts of beta's coefficients as rational unknowns, and
/// checks d beta = 0 on a basis of solutions. Requires a splitting of qK
/// shape (throws Error(PreconditionViolated)).
LemmaReport lemma_tosatti_space(const ComplexSplitting &s);

/// Names for printing/parsing: coframe indices below `central_from` print as
/// z/zb, the rest as n/nb (1-based within each group).
struct FormNaming {
  std::size_t half_dim;
  std::size_t central_from;

  explicit FormNaming(std::size_t m) : half_dim(m), central_from(m) {}
  FormNaming(std::size_t m, std::size_t l) : half_dim(m), central_from(l) {}
};

/// "c * z1^zb2 + c' * n1^nb1", terms in increasing index order, "0" if empty.
std::string to_string(const InvariantForm &f, const FormNaming &naming);
std::string to_string(const InvariantForm &f);
InvariantForm parse_form(std::string_view text, const FormNaming &naming);

} // namespace qkcf
