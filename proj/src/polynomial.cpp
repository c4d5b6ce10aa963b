#include "cdpoly/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace cdpoly {

namespace {

template <Scalar S>
void trim_scalars(std::vector<S>& c) {
  while (!c.empty() && c.back() == S(0)) c.pop_back();
}

template <Scalar S>
double coordinate_length(const Element<S>& e) {
  double s = 0;
  for (const S& c : e.coeffs()) {
    const double d = to_double(c);
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// CentralPolynomial

template <Scalar S>
CentralPolynomial<S>::CentralPolynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
  trim_scalars(coeffs_);
}

template <Scalar S>
S CentralPolynomial<S>::operator()(const S& x) const {
  S acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = S(acc * x + *it);
  return acc;
}

template <Scalar S>
CentralPolynomial<S> operator+(const CentralPolynomial<S>& a, const CentralPolynomial<S>& b) {
  std::vector<S> c(std::max(a.coeffs().size(), b.coeffs().size()), S(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return CentralPolynomial<S>(std::move(c));
}

template <Scalar S>
CentralPolynomial<S> operator*(const CentralPolynomial<S>& a, const CentralPolynomial<S>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<S> c(a.coeffs().size() + b.coeffs().size() - 1, S(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return CentralPolynomial<S>(std::move(c));
}

template <Scalar S>
CentralPolynomial<S> derivative(const CentralPolynomial<S>& p) {
  std::vector<S> c;
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) c.push_back(S(static_cast<long>(k) * p.coeffs()[k]));
  return CentralPolynomial<S>(std::move(c));
}

template <Scalar S>
CentralPolynomial<S> quadratic(const QuadraticClass<S>& q) {
  return CentralPolynomial<S>(std::vector<S>{q.norm, S(-q.trace), S(1)});
}

template <Scalar S>
std::vector<double> to_double(const CentralPolynomial<S>& p) {
  std::vector<double> out;
  out.reserve(p.coeffs().size());
  for (const S& c : p.coeffs()) out.push_back(to_double(c));
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

template <Scalar S>
Polynomial<S>::Polynomial(ParamsPtr<S> params) : params_(std::move(params)) {}

template <Scalar S>
Polynomial<S>::Polynomial(ParamsPtr<S> params, std::vector<Element<S>> coeffs)
    : params_(std::move(params)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_params(*params_, c.params());
  trim();
}

template <Scalar S>
void Polynomial<S>::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero(0.0)) coeffs_.pop_back();
}

template <Scalar S>
Polynomial<S> Polynomial<S>::central(ParamsPtr<S> params, const CentralPolynomial<S>& p) {
  std::vector<Element<S>> c;
  c.reserve(p.coeffs().size());
  for (const S& s : p.coeffs()) c.push_back(Element<S>::scalar(params, s));
  return Polynomial(std::move(params), std::move(c));
}

template <Scalar S>
Polynomial<S> Polynomial<S>::linear_factor(const Element<S>& lambda) {
  return Polynomial(lambda.params_ptr(), {-lambda, Element<S>::scalar(lambda.params_ptr(), S(1))});
}

template <Scalar S>
Element<S> Polynomial<S>::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Element<S>(params_);
}

template <Scalar S>
const Element<S>& Polynomial<S>::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

template <Scalar S>
bool Polynomial<S>::is_monic(double tol) const {
  if (coeffs_.empty()) return false;
  const Element<S>& lead = coeffs_.back();
  return lead.is_scalar(tol) && near_equal(lead[0], S(1), tol);
}

template <Scalar S>
bool Polynomial<S>::has_central_coeffs(double tol) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [tol](const Element<S>& c) { return c.is_scalar(tol); });
}

template <Scalar S>
Polynomial<S> poly_add(const Polynomial<S>& f, const Polynomial<S>& g) {
  require_same_params(f.params(), g.params());
  const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<Element<S>> c;
  c.reserve(n);
  for (std::size_t k = 0; k < n; ++k) c.push_back(f.coeff(k) + g.coeff(k));
  return Polynomial<S>(f.params_ptr(), std::move(c));
}

template <Scalar S>
Polynomial<S> poly_neg(const Polynomial<S>& f) {
  std::vector<Element<S>> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(-a);
  return Polynomial<S>(f.params_ptr(), std::move(c));
}

template <Scalar S>
Polynomial<S> poly_sub(const Polynomial<S>& f, const Polynomial<S>& g) {
  return poly_add(f, poly_neg(g));
}

template <Scalar S>
Polynomial<S> poly_scale(const Element<S>& c, const Polynomial<S>& f) {
  require_same_params(c.params(), f.params());
  std::vector<Element<S>> out;
  out.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) out.push_back(cd_mul(c, a));
  return Polynomial<S>(f.params_ptr(), std::move(out));
}

template <Scalar S>
Polynomial<S> poly_mul(const Polynomial<S>& f, const Polynomial<S>& g) {
  require_same_params(f.params(), g.params());
  if (f.is_zero() || g.is_zero()) return Polynomial<S>(f.params_ptr());
  std::vector<Element<S>> c(f.coeffs().size() + g.coeffs().size() - 1, Element<S>(f.params_ptr()));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) c[i + j] += cd_mul(f.coeffs()[i], g.coeffs()[j]);
  return Polynomial<S>(f.params_ptr(), std::move(c));
}

template <Scalar S>
Polynomial<S> poly_mul(const Polynomial<S>& f, const CentralPolynomial<S>& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial<S>(f.params_ptr());
  std::vector<Element<S>> c(f.coeffs().size() + g.coeffs().size() - 1, Element<S>(f.params_ptr()));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) c[i + j] += f.coeffs()[i] * g.coeffs()[j];
  return Polynomial<S>(f.params_ptr(), std::move(c));
}

template <Scalar S>
Polynomial<S> poly_conj(const Polynomial<S>& f) {
  std::vector<Element<S>> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(conj(a));
  return Polynomial<S>(f.params_ptr(), std::move(c));
}

template <Scalar S>
Polynomial<S> derivative(const Polynomial<S>& f) {
  std::vector<Element<S>> c;
  for (std::size_t k = 1; k < f.coeffs().size(); ++k) c.push_back(f.coeffs()[k] * S(static_cast<long>(k)));
  return Polynomial<S>(f.params_ptr(), std::move(c));
}

template <Scalar S>
double coefficient_scale(const Polynomial<S>& f) {
  double m = 0;
  for (const auto& a : f.coeffs()) m = std::max(m, coordinate_length(a));
  return m;
}

template <Scalar S>
CentralPolynomial<S> demote_central(const Polynomial<S>& f, double tol) {
  const double band = tol * (1.0 + coefficient_scale(f));
  std::vector<S> c;
  c.reserve(f.coeffs().size());
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (!f.coeffs()[k].is_scalar(band))
      throw Error(ErrorCode::NonCentralResult, "coefficient of x^" + std::to_string(k) + " is not scalar");
    c.push_back(f.coeffs()[k][0]);
  }
  return CentralPolynomial<S>(std::move(c));
}

template <Scalar S>
CentralPolynomial<S> companion(const Polynomial<S>& f, double tol) {
  return demote_central(poly_mul(poly_conj(f), f), tol);
}

template <Scalar S>
Element<S> eval(const Polynomial<S>& f, const Element<S>& lambda) {
  require_same_params(f.params(), lambda.params());
  Element<S> acc(f.params_ptr());
  Element<S> power = Element<S>::scalar(f.params_ptr(), S(1));
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) power = cd_mul(power, lambda);
    acc += cd_mul(f.coeffs()[k], power);
  }
  return acc;
}

template <Scalar S>
Element<S> eval(const CentralPolynomial<S>& p, const Element<S>& lambda) {
  Element<S> acc(lambda.params_ptr());
  Element<S> power = Element<S>::scalar(lambda.params_ptr(), S(1));
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k > 0) power = cd_mul(power, lambda);
    acc += power * p.coeffs()[k];
  }
  return acc;
}

template <Scalar S>
QuadraticDivision<S> divrem_quadratic(const Polynomial<S>& f, const QuadraticClass<S>& q) {
  std::vector<Element<S>> r(f.coeffs());
  const auto& params = f.params_ptr();
  while (r.size() < 2) r.emplace_back(params);
  std::vector<Element<S>> quotient(r.size() >= 2 ? r.size() - 2 : 0, Element<S>(params));
  for (std::size_t k = r.size() - 1; k >= 2; --k) {
    const Element<S> c = r[k];
    quotient[k - 2] = c;
    r[k - 1] += c * q.trace;
    r[k - 2] -= c * q.norm;
    r[k] = Element<S>(params);
  }
  return {Polynomial<S>(params, std::move(quotient)), r[1], r[0]};
}

template <Scalar S>
Polynomial<double> to_double(const Polynomial<S>& f, const ParamsPtr<double>& target) {
  std::vector<Element<double>> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(to_double(a, target));
  return Polynomial<double>(target, std::move(c));
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const Polynomial<S>& f) {
  os << '{';
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k) os << ", ";
    os << "x^" << k << ": " << f.coeffs()[k];
  }
  return os << '}';
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const CentralPolynomial<S>& p) {
  os << '[';
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k) os << ", ";
    os << p.coeffs()[k];
  }
  return os << ']';
}

#define CDPOLY_INSTANTIATE_POLY(S)                                                              \
  template class CentralPolynomial<S>;                                                         \
  template CentralPolynomial<S> operator+ <S>(const CentralPolynomial<S>&, const CentralPolynomial<S>&); \
  template CentralPolynomial<S> operator* <S>(const CentralPolynomial<S>&, const CentralPolynomial<S>&); \
  template CentralPolynomial<S> derivative<S>(const CentralPolynomial<S>&);                    \
  template CentralPolynomial<S> quadratic<S>(const QuadraticClass<S>&);                        \
  template std::vector<double> to_double<S>(const CentralPolynomial<S>&);                      \
  template class Polynomial<S>;                                                                \
  template Polynomial<S> poly_add<S>(const Polynomial<S>&, const Polynomial<S>&);              \
  template Polynomial<S> poly_sub<S>(const Polynomial<S>&, const Polynomial<S>&);              \
  template Polynomial<S> poly_neg<S>(const Polynomial<S>&);                                    \
  template Polynomial<S> poly_scale<S>(const Element<S>&, const Polynomial<S>&);               \
  template Polynomial<S> poly_mul<S>(const Polynomial<S>&, const Polynomial<S>&);              \
  template Polynomial<S> poly_mul<S>(const Polynomial<S>&, const CentralPolynomial<S>&);       \
  template Polynomial<S> poly_conj<S>(const Polynomial<S>&);                                   \
  template Polynomial<S> derivative<S>(const Polynomial<S>&);                                  \
  template double coefficient_scale<S>(const Polynomial<S>&);                                  \
  template CentralPolynomial<S> demote_central<S>(const Polynomial<S>&, double);               \
  template CentralPolynomial<S> companion<S>(const Polynomial<S>&, double);                    \
  template Element<S> eval<S>(const Polynomial<S>&, const Element<S>&);                        \
  template Element<S> eval<S>(const CentralPolynomial<S>&, const Element<S>&);                 \
  template QuadraticDivision<S> divrem_quadratic<S>(const Polynomial<S>&, const QuadraticClass<S>&); \
  template Polynomial<double> to_double<S>(const Polynomial<S>&, const ParamsPtr<double>&);    \
  template std::ostream& operator<< <S>(std::ostream&, const Polynomial<S>&);                  \
  template std::ostream& operator<< <S>(std::ostream&, const CentralPolynomial<S>&);

CDPOLY_INSTANTIATE_POLY(Rational)
CDPOLY_INSTANTIATE_POLY(double)

#undef CDPOLY_INSTANTIATE_POLY

}  // namespace cdpoly
