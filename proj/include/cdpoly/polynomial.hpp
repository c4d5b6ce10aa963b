#pragma once

#include <initializer_list>
#include <ostream>
#include <vector>

#include "cdpoly/algebra.hpp"

namespace cdpoly {

/// Degree reported for the zero polynomial; stands in for minus infinity.
inline constexpr int kZeroDegree = -1;

/// A polynomial in F[x] (central coefficients).  Index k holds the
/// coefficient of x^k; trailing zeros are always trimmed.
template <Scalar S>
class CentralPolynomial {
 public:
  CentralPolynomial() = default;
  explicit CentralPolynomial(std::vector<S> coeffs);
  CentralPolynomial(std::initializer_list<S> coeffs) : CentralPolynomial(std::vector<S>(coeffs)) {}

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<S>& coeffs() const noexcept { return coeffs_; }
  /// Zero beyond the degree.
  S operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : S(0); }

  S operator()(const S& x) const;

  friend bool operator==(const CentralPolynomial&, const CentralPolynomial&) = default;

 private:
  std::vector<S> coeffs_;
};

template <Scalar S>
CentralPolynomial<S> operator+(const CentralPolynomial<S>& a, const CentralPolynomial<S>& b);
template <Scalar S>
CentralPolynomial<S> operator*(const CentralPolynomial<S>& a, const CentralPolynomial<S>& b);
template <Scalar S>
CentralPolynomial<S> derivative(const CentralPolynomial<S>& p);

/// x^2 - T x + N.
template <Scalar S>
CentralPolynomial<S> quadratic(const QuadraticClass<S>& q);

template <Scalar S>
std::vector<double> to_double(const CentralPolynomial<S>& p);

/// A polynomial in A[x] with coefficients written on the left of the
/// central indeterminate: f(x) = a_n x^n + ... + a_1 x + a_0.
template <Scalar S>
class Polynomial {
 public:
  explicit Polynomial(ParamsPtr<S> params);
  Polynomial(ParamsPtr<S> params, std::vector<Element<S>> coeffs);

  /// Promotes a central polynomial into A[x].
  static Polynomial central(ParamsPtr<S> params, const CentralPolynomial<S>& p);
  /// x - lambda.
  static Polynomial linear_factor(const Element<S>& lambda);

  const Params<S>& params() const noexcept { return *params_; }
  const ParamsPtr<S>& params_ptr() const noexcept { return params_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Element<S>>& coeffs() const noexcept { return coeffs_; }
  /// Zero element beyond the degree.
  Element<S> coeff(std::size_t k) const;
  /// Throws InvalidArgument on the zero polynomial.
  const Element<S>& leading() const;

  bool is_monic(double tol = kDefaultTol) const;
  /// True if every coefficient is a scalar multiple of 1.
  bool has_central_coeffs(double tol = kDefaultTol) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_ && *a.params_ == *b.params_; }

 private:
  void trim();

  ParamsPtr<S> params_;
  std::vector<Element<S>> coeffs_;
};

template <Scalar S>
Polynomial<S> poly_add(const Polynomial<S>& f, const Polynomial<S>& g);
template <Scalar S>
Polynomial<S> poly_sub(const Polynomial<S>& f, const Polynomial<S>& g);
template <Scalar S>
Polynomial<S> poly_neg(const Polynomial<S>& f);
/// Left scaling: every coefficient a_k becomes c a_k.
template <Scalar S>
Polynomial<S> poly_scale(const Element<S>& c, const Polynomial<S>& f);
/// Convolution with c_i d_j, the left factor's coefficient on the left.
template <Scalar S>
Polynomial<S> poly_mul(const Polynomial<S>& f, const Polynomial<S>& g);
template <Scalar S>
Polynomial<S> poly_mul(const Polynomial<S>& f, const CentralPolynomial<S>& g);
template <Scalar S>
Polynomial<S> poly_conj(const Polynomial<S>& f);
template <Scalar S>
Polynomial<S> derivative(const Polynomial<S>& f);

template <Scalar S>
Polynomial<S> operator+(const Polynomial<S>& f, const Polynomial<S>& g) {
  return poly_add(f, g);
}
template <Scalar S>
Polynomial<S> operator-(const Polynomial<S>& f, const Polynomial<S>& g) {
  return poly_sub(f, g);
}
template <Scalar S>
Polynomial<S> operator*(const Polynomial<S>& f, const Polynomial<S>& g) {
  return poly_mul(f, g);
}

/// Demotes a polynomial whose coefficients are all scalar; throws
/// NonCentralResult otherwise.  The test is exact for rationals and uses
/// tol * (1 + max coefficient magnitude) for floats.
template <Scalar S>
CentralPolynomial<S> demote_central(const Polynomial<S>& f, double tol = kDefaultTol);

/// C_f = conj(f) f, verified central.
template <Scalar S>
CentralPolynomial<S> companion(const Polynomial<S>& f, double tol = kDefaultTol);

/// f(lambda) = sum a_k (lambda^k); the zero polynomial evaluates to 0.
template <Scalar S>
Element<S> eval(const Polynomial<S>& f, const Element<S>& lambda);

/// Central polynomial evaluated at an element of A.
template <Scalar S>
Element<S> eval(const CentralPolynomial<S>& p, const Element<S>& lambda);

template <Scalar S>
struct QuadraticDivision {
  Polynomial<S> quotient;
  Element<S> linear;    // a in the remainder a x + b
  Element<S> constant;  // b
};

/// f = quotient (x^2 - T x + N) + a x + b, by the top-down rewrite x^2 -> T x - N.
template <Scalar S>
QuadraticDivision<S> divrem_quadratic(const Polynomial<S>& f, const QuadraticClass<S>& q);

/// Largest Euclidean coordinate length over the coefficients, in floating
/// point.  Used to scale tolerances.
template <Scalar S>
double coefficient_scale(const Polynomial<S>& f);

template <Scalar S>
Polynomial<double> to_double(const Polynomial<S>& f, const ParamsPtr<double>& target);

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const Polynomial<S>& f);
template <Scalar S>
std::ostream& operator<<(std::ostream& os, const CentralPolynomial<S>& p);

}  // namespace cdpoly
