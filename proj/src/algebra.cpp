#include "cdpoly/algebra.hpp"

#include <cmath>
#include <sstream>

namespace cdpoly {

namespace {

template <Scalar S>
int base_level(const Params<S>& p) {
  return p.form() == Form::Gamma ? 0 : 1;
}

template <Scalar S>
void conj_rec(const Params<S>& p, int level, std::span<const S> a, std::span<S> out) {
  if (level == base_level(p)) {
    if (p.form() == Form::Gamma) {
      out[0] = a[0];
    } else {
      out[0] = a[0] + a[1];
      out[1] = -a[1];
    }
    return;
  }
  const std::size_t half = a.size() / 2;
  conj_rec(p, level - 1, a.first(half), out.first(half));
  for (std::size_t i = half; i < a.size(); ++i) out[i] = -a[i];
}

template <Scalar S>
void mul_rec(const Params<S>& p, int level, std::span<const S> x, std::span<const S> y, std::span<S> out) {
  if (level == base_level(p)) {
    if (p.form() == Form::Gamma) {
      out[0] = x[0] * y[0];
    } else {
      // l^2 = l + mu
      const S bd = x[1] * y[1];
      out[0] = x[0] * y[0] + p.mu() * bd;
      out[1] = x[0] * y[1] + x[1] * y[0] + bd;
    }
    return;
  }
  const std::size_t half = x.size() / 2;
  auto a = x.first(half), b = x.subspan(half);
  auto c = y.first(half), d = y.subspan(half);
  std::vector<S> conj_buf(half), tmp(half);

  // first = ac + g conj(d) b
  auto first = out.first(half);
  mul_rec(p, level - 1, a, c, first);
  conj_rec<S>(p, level - 1, d, conj_buf);
  mul_rec<S>(p, level - 1, conj_buf, b, tmp);
  const S& g = p.doubling_gamma(level - 1);
  for (std::size_t i = 0; i < half; ++i) first[i] += g * tmp[i];

  // second = da + b conj(c)
  auto second = out.subspan(half);
  mul_rec(p, level - 1, d, a, second);
  conj_rec<S>(p, level - 1, c, conj_buf);
  mul_rec<S>(p, level - 1, b, conj_buf, tmp);
  for (std::size_t i = 0; i < half; ++i) second[i] += tmp[i];
}

template <Scalar S>
S base_trace(const Params<S>& p, std::span<const S> a) {
  return p.form() == Form::Gamma ? S(2 * a[0]) : S(2 * a[0] + a[1]);
}

/// Norm of the A_1 element alpha + beta l_1 (Mu form) or alpha + beta e_1
/// (Gamma form, e_1^2 = g_0).
template <Scalar S>
S pair_norm(const Params<S>& p, const S& alpha, const S& beta) {
  if (p.form() == Form::Mu) return S(alpha * alpha + alpha * beta - p.mu() * beta * beta);
  return S(alpha * alpha - p.gammas()[0] * beta * beta);
}

template <Scalar S>
S norm_rec(const Params<S>& p, int level, std::span<const S> a) {
  if (level == base_level(p)) {
    if (p.form() == Form::Gamma) return S(a[0] * a[0]);
    return pair_norm(p, a[0], a[1]);
  }
  const std::size_t half = a.size() / 2;
  return S(norm_rec(p, level - 1, a.first(half)) -
           p.doubling_gamma(level - 1) * norm_rec(p, level - 1, a.subspan(half)));
}

template <Scalar S>
bool is_zero_scalar(const S& s, double tol) {
  return near_zero(s, tol);
}

}  // namespace

template <Scalar S>
ParamsPtr<S> make_params(Form form, S mu, std::vector<S> gammas, int level) {
  if (level < 1) throw Error(ErrorCode::BadLength, "level must be at least 1");
  const std::size_t expected = form == Form::Gamma ? static_cast<std::size_t>(level) : static_cast<std::size_t>(level - 1);
  if (gammas.size() != expected) {
    throw Error(ErrorCode::BadLength, "expected " + std::to_string(expected) + " gammas at level " +
                                          std::to_string(level) + ", got " + std::to_string(gammas.size()));
  }
  for (const S& g : gammas)
    if (g == 0) throw Error(ErrorCode::ZeroGamma, "doubling parameters must be nonzero");
  if (form == Form::Mu && S(4 * mu + 1) == 0) throw Error(ErrorCode::DegenerateMu, "4mu + 1 = 0");

  std::shared_ptr<Params<S>> p(new Params<S>());
  p->form_ = form;
  p->mu_ = form == Form::Mu ? mu : S(0);
  p->gammas_ = std::move(gammas);
  p->level_ = level;

  // Weights use the parameters of steps A_1 -> A_2 -> ... -> A_n.
  const std::size_t pairs = std::size_t{1} << (level - 1);
  p->weights_.assign(pairs, S(1));
  for (std::size_t k = 0; k < pairs; ++k) {
    for (int l = 1; l < level; ++l) {
      if ((k >> (l - 1)) & 1u) p->weights_[k] *= -p->doubling_gamma(l);
    }
  }

  p->locally_complex_ = form == Form::Gamma;
  for (const S& g : p->gammas_)
    if (g != S(-1)) p->locally_complex_ = false;
  return p;
}

template <Scalar S>
ParamsPtr<S> main_sequence(int level) {
  return make_params<S>(Form::Gamma, S(0), std::vector<S>(static_cast<std::size_t>(level), S(-1)), level);
}

template <Scalar S>
ParamsPtr<S> split_quaternions() {
  return make_params<S>(Form::Gamma, S(0), {S(-1), S(1)}, 2);
}

template <Scalar S>
void require_same_params(const Params<S>& a, const Params<S>& b) {
  if (&a != &b && !(a == b)) throw Error(ErrorCode::ParamsMismatch, "operands belong to different algebras");
}

template <Scalar S>
Element<S>::Element(ParamsPtr<S> params) : params_(std::move(params)), coeffs_(params_->dim(), S(0)) {}

template <Scalar S>
Element<S>::Element(ParamsPtr<S> params, std::vector<S> coeffs) : params_(std::move(params)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != params_->dim()) {
    throw Error(ErrorCode::BadLength, "element needs " + std::to_string(params_->dim()) + " coefficients, got " +
                                          std::to_string(coeffs_.size()));
  }
}

template <Scalar S>
Element<S> Element<S>::scalar(ParamsPtr<S> params, S value) {
  Element e(std::move(params));
  e.coeffs_[0] = std::move(value);
  return e;
}

template <Scalar S>
Element<S> Element<S>::basis(ParamsPtr<S> params, std::size_t index, S coeff) {
  Element e(std::move(params));
  if (index >= e.dim()) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  e.coeffs_[index] = std::move(coeff);
  return e;
}

template <Scalar S>
bool Element<S>::is_zero(double tol) const {
  for (const S& c : coeffs_)
    if (!is_zero_scalar(c, tol)) return false;
  return true;
}

template <Scalar S>
bool Element<S>::is_scalar(double tol) const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!is_zero_scalar(coeffs_[i], tol)) return false;
  return true;
}

template <Scalar S>
Element<S>& Element<S>::operator+=(const Element& other) {
  require_same_params(*params_, *other.params_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

template <Scalar S>
Element<S>& Element<S>::operator-=(const Element& other) {
  require_same_params(*params_, *other.params_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

template <Scalar S>
Element<S>& Element<S>::operator*=(const S& s) {
  for (S& c : coeffs_) c *= s;
  return *this;
}

template <Scalar S>
Element<S> Element<S>::operator-() const {
  Element r(*this);
  for (S& c : r.coeffs_) c = -c;
  return r;
}

template <Scalar S>
Element<S> cd_mul(const Element<S>& a, const Element<S>& b) {
  require_same_params(a.params(), b.params());
  std::vector<S> out(a.dim(), S(0));
  mul_rec<S>(a.params(), a.params().level(), a.coeffs(), b.coeffs(), out);
  return Element<S>(a.params_ptr(), std::move(out));
}

template <Scalar S>
Element<S> conj(const Element<S>& a) {
  std::vector<S> out(a.dim(), S(0));
  conj_rec<S>(a.params(), a.params().level(), a.coeffs(), out);
  return Element<S>(a.params_ptr(), std::move(out));
}

template <Scalar S>
S trace(const Element<S>& a) {
  return base_trace(a.params(), a.coeffs());
}

template <Scalar S>
S norm(const Element<S>& a) {
  return norm_rec(a.params(), a.params().level(), a.coeffs());
}

template <Scalar S>
S trace_direct(const Element<S>& a, double tol) {
  Element<S> t = a + conj(a);
  if (!t.is_scalar(tol)) throw Error(ErrorCode::NonCentralResult, "a + conj(a) is not scalar");
  return t[0];
}

template <Scalar S>
S norm_direct(const Element<S>& a, double tol) {
  Element<S> n = cd_mul(conj(a), a);
  if (!n.is_scalar(tol)) throw Error(ErrorCode::NonCentralResult, "conj(a) a is not scalar");
  return n[0];
}

template <Scalar S>
S norm_by_weights(const Element<S>& a) {
  const Params<S>& p = a.params();
  const auto& w = p.norm_weights();
  S total(0);
  for (std::size_t k = 0; k < w.size(); ++k) total += w[k] * pair_norm(p, a[2 * k], a[2 * k + 1]);
  return total;
}

template <Scalar S>
QuadraticClass<S> char_poly(const Element<S>& a) {
  return {trace(a), norm(a)};
}

template <Scalar S>
Element<S> inverse(const Element<S>& a, double tol) {
  const S n = norm(a);
  if (is_zero_scalar(n, tol)) throw Error(ErrorCode::NotInvertible, "element has zero norm");
  Element<S> r = conj(a);
  r *= S(S(1) / n);
  return r;
}

template <Scalar S>
bool is_alternative(const Element<S>& a, double tol) {
  const Element<S> aa = cd_mul(a, a);
  for (std::size_t m = 0; m < a.dim(); ++m) {
    const Element<S> b = Element<S>::basis(a.params_ptr(), m);
    if (!(cd_mul(a, cd_mul(a, b)) - cd_mul(aa, b)).is_zero(tol)) return false;
    if (!(cd_mul(cd_mul(b, a), a) - cd_mul(b, aa)).is_zero(tol)) return false;
  }
  return true;
}

template <Scalar S>
bool quadratically_equivalent(const Element<S>& a, const Element<S>& b, double tol) {
  require_same_params(a.params(), b.params());
  const auto pa = char_poly(a), pb = char_poly(b);
  return near_equal(pa.trace, pb.trace, tol) && near_equal(pa.norm, pb.norm, tol);
}

template <Scalar S>
S inner_product(const Element<S>& a, const Element<S>& b) {
  return S((norm(a + b) - norm(a) - norm(b)) / 2);
}

namespace {
template <Scalar S>
void require_locally_complex(const Params<S>& p) {
  if (!p.is_locally_complex()) throw Error(ErrorCode::NotLocallyComplex, "algebra is not in the real main sequence");
}
}  // namespace

template <Scalar S>
S re(const Element<S>& a) {
  require_locally_complex(a.params());
  return S(trace(a) / 2);
}

template <Scalar S>
Element<S> im(const Element<S>& a) {
  require_locally_complex(a.params());
  Element<S> r(a);
  r[0] = S(0);
  return r;
}

template <Scalar S>
double abs(const Element<S>& a) {
  require_locally_complex(a.params());
  return std::sqrt(to_double(norm(a)));
}

template <Scalar S>
ParamsPtr<double> to_double(const Params<S>& params) {
  std::vector<double> g;
  g.reserve(params.gammas().size());
  for (const S& x : params.gammas()) g.push_back(to_double(x));
  return make_params<double>(params.form(), to_double(params.mu()), std::move(g), params.level());
}

template <Scalar S>
Element<double> to_double(const Element<S>& a, const ParamsPtr<double>& target) {
  std::vector<double> c;
  c.reserve(a.dim());
  for (const S& x : a.coeffs()) c.push_back(to_double(x));
  return Element<double>(target, std::move(c));
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const Element<S>& a) {
  os << '[';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) os << ", ";
    os << a[i];
  }
  return os << ']';
}

#define CDPOLY_INSTANTIATE_ALGEBRA(S)                                                     \
  template ParamsPtr<S> make_params<S>(Form, S, std::vector<S>, int);                   \
  template ParamsPtr<S> main_sequence<S>(int);                                          \
  template ParamsPtr<S> split_quaternions<S>();                                         \
  template void require_same_params<S>(const Params<S>&, const Params<S>&);             \
  template class Element<S>;                                                            \
  template Element<S> cd_mul<S>(const Element<S>&, const Element<S>&);                  \
  template Element<S> conj<S>(const Element<S>&);                                       \
  template S trace<S>(const Element<S>&);                                               \
  template S norm<S>(const Element<S>&);                                                \
  template S trace_direct<S>(const Element<S>&, double);                                \
  template S norm_direct<S>(const Element<S>&, double);                                 \
  template S norm_by_weights<S>(const Element<S>&);                                     \
  template QuadraticClass<S> char_poly<S>(const Element<S>&);                           \
  template Element<S> inverse<S>(const Element<S>&, double);                            \
  template bool is_alternative<S>(const Element<S>&, double);                           \
  template bool quadratically_equivalent<S>(const Element<S>&, const Element<S>&, double); \
  template S inner_product<S>(const Element<S>&, const Element<S>&);                    \
  template S re<S>(const Element<S>&);                                                  \
  template Element<S> im<S>(const Element<S>&);                                         \
  template double abs<S>(const Element<S>&);                                            \
  template ParamsPtr<double> to_double<S>(const Params<S>&);                            \
  template Element<double> to_double<S>(const Element<S>&, const ParamsPtr<double>&);   \
  template std::ostream& operator<< <S>(std::ostream&, const Element<S>&);

CDPOLY_INSTANTIATE_ALGEBRA(Rational)
CDPOLY_INSTANTIATE_ALGEBRA(double)

#undef CDPOLY_INSTANTIATE_ALGEBRA

}  // namespace cdpoly
