#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <span>
#include <vector>

#include "cdpoly/error.hpp"
#include "cdpoly/scalar.hpp"

namespace cdpoly {

/// How the first two-dimensional step of the tower is specified.
///   Mu:    A_1 = F[l : l^2 = l + mu], basis L_n, gammas = (g_1, ..., g_{n-1}).
///   Gamma: A_0 = F, A_1 = F{g_0},     basis E_n, gammas = (g_0, ..., g_{n-1}).
enum class Form { Mu, Gamma };

template <Scalar S>
class Params {
 public:
  Form form() const noexcept { return form_; }
  const S& mu() const noexcept { return mu_; }
  const std::vector<S>& gammas() const noexcept { return gammas_; }
  int level() const noexcept { return level_; }
  std::size_t dim() const noexcept { return std::size_t{1} << level_; }

  /// Parameter of the doubling step A_step -> A_{step+1}.
  const S& doubling_gamma(int step) const {
    return form_ == Form::Gamma ? gammas_[static_cast<std::size_t>(step)]
                                : gammas_[static_cast<std::size_t>(step - 1)];
  }

  /// Weights w_k, 0 <= k < 2^{n-1}, with
  ///   norm(x) = sum_k w_k * norm_1(x_{2k} + x_{2k+1} l_1),
  /// where norm_1 is the norm of A_1.  w_k is the product of (-g_l) over the
  /// binary digits c_l = 1 of k, l = 1..n-1.
  const std::vector<S>& norm_weights() const noexcept { return weights_; }

  /// Real main sequence: Gamma form with every parameter equal to -1.
  bool is_locally_complex() const noexcept { return locally_complex_; }

  /// C, H, O: main sequence up to level 3.
  bool is_division_algebra() const noexcept { return locally_complex_ && level_ <= 3; }

  bool operator==(const Params& other) const {
    return form_ == other.form_ && level_ == other.level_ && mu_ == other.mu_ && gammas_ == other.gammas_;
  }

 private:
  template <Scalar T>
  friend std::shared_ptr<const Params<T>> make_params(Form, T, std::vector<T>, int);

  Params() = default;

  Form form_ = Form::Gamma;
  S mu_ = S(0);
  std::vector<S> gammas_;
  int level_ = 0;
  std::vector<S> weights_;
  bool locally_complex_ = false;
};

template <Scalar S>
using ParamsPtr = std::shared_ptr<const Params<S>>;

/// Validates and builds construction data.  `mu` is ignored for Form::Gamma.
/// Throws ZeroGamma, DegenerateMu (4mu+1 = 0) or BadLength.
template <Scalar S>
ParamsPtr<S> make_params(Form form, S mu, std::vector<S> gammas, int level);

/// (-1, ..., -1) at the given level: C, H, O, S, ...
template <Scalar S>
ParamsPtr<S> main_sequence(int level);

/// (-1, 1): the split quaternions, isomorphic to 2x2 real matrices.
template <Scalar S>
ParamsPtr<S> split_quaternions();

template <Scalar S>
class Element {
 public:
  /// The zero element.
  explicit Element(ParamsPtr<S> params);
  Element(ParamsPtr<S> params, std::vector<S> coeffs);

  static Element scalar(ParamsPtr<S> params, S value);
  static Element basis(ParamsPtr<S> params, std::size_t index, S coeff = S(1));

  const Params<S>& params() const noexcept { return *params_; }
  const ParamsPtr<S>& params_ptr() const noexcept { return params_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }
  std::span<const S> coeffs() const noexcept { return coeffs_; }
  const S& operator[](std::size_t i) const { return coeffs_[i]; }
  S& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero(double tol = kDefaultTol) const;
  /// True when every non-unit coordinate vanishes.
  bool is_scalar(double tol = kDefaultTol) const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const S& s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const S& s) { return a *= s; }
  friend Element operator*(const S& s, Element a) { return a *= s; }
  Element operator-() const;

  /// Coordinatewise equality (exact for both backends).
  friend bool operator==(const Element& a, const Element& b) {
    return a.params_ == b.params_ ? a.coeffs_ == b.coeffs_
                                  : (*a.params_ == *b.params_ && a.coeffs_ == b.coeffs_);
  }

 private:
  ParamsPtr<S> params_;
  std::vector<S> coeffs_;
};

template <Scalar S>
struct QuadraticClass {
  S trace;
  S norm;

  /// T^2 - 4N of x^2 - T x + N.
  S discriminant() const { return S(trace * trace - 4 * norm); }
  friend bool operator==(const QuadraticClass&, const QuadraticClass&) = default;
};

/// Throws ParamsMismatch unless both operands live in the same algebra.
template <Scalar S>
void require_same_params(const Params<S>& a, const Params<S>& b);

/// The doubling product (a,b)(c,d) = (ac + g conj(d) b, da + b conj(c)).
template <Scalar S>
Element<S> cd_mul(const Element<S>& a, const Element<S>& b);

template <Scalar S>
Element<S> operator*(const Element<S>& a, const Element<S>& b) {
  return cd_mul(a, b);
}

template <Scalar S>
Element<S> conj(const Element<S>& a);

/// Trace and norm by the closed recursions on the doubling.
template <Scalar S>
S trace(const Element<S>& a);
template <Scalar S>
S norm(const Element<S>& a);

/// a + conj(a) and conj(a) a, read off coordinate 0.  Throws NonCentralResult
/// if the product is not scalar.
template <Scalar S>
S trace_direct(const Element<S>& a, double tol = kDefaultTol);
template <Scalar S>
S norm_direct(const Element<S>& a, double tol = kDefaultTol);

/// sum_k w_k * norm_1(a_{2k} + a_{2k+1} l_1) with the weights of Params.
template <Scalar S>
S norm_by_weights(const Element<S>& a);

template <Scalar S>
QuadraticClass<S> char_poly(const Element<S>& a);

/// conj(a) / norm(a).  Throws NotInvertible on an (isotropic) zero norm.
template <Scalar S>
Element<S> inverse(const Element<S>& a, double tol = kDefaultTol);

/// Checks a(ab) = (aa)b and (ba)a = b(aa) on every basis element b.
template <Scalar S>
bool is_alternative(const Element<S>& a, double tol = kDefaultTol);

template <Scalar S>
bool quadratically_equivalent(const Element<S>& a, const Element<S>& b, double tol = kDefaultTol);

/// Symmetric bilinear form of the norm, by polarization.
template <Scalar S>
S inner_product(const Element<S>& a, const Element<S>& b);

/// Locally-complex only (throws NotLocallyComplex otherwise).
template <Scalar S>
S re(const Element<S>& a);
template <Scalar S>
Element<S> im(const Element<S>& a);
template <Scalar S>
double abs(const Element<S>& a);

template <Scalar S>
Element<double> to_double(const Element<S>& a, const ParamsPtr<double>& target);

template <Scalar S>
ParamsPtr<double> to_double(const Params<S>& params);

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const Element<S>& a);

}  // namespace cdpoly
