#include "cdpoly/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "cdpoly/geometry.hpp"

namespace cdpoly {

namespace {

using Q = Element<Rational>;
using PQ = Polynomial<Rational>;
using D = Element<double>;
using PD = Polynomial<double>;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome ok(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome bad(std::string detail) { return {false, std::move(detail)}; }

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Small seeded generators; the suite must not depend on anything outside the
// library.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real() { return std::uniform_real_distribution<double>(-1.0, 1.0)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  D element(const ParamsPtr<double>& p) {
    std::vector<double> c(p->dim());
    for (auto& v : c) v = real();
    return D(p, std::move(c));
  }
  Q element(const ParamsPtr<Rational>& p) {
    std::vector<Rational> c(p->dim());
    for (auto& v : c) {
      v = Rational(integer(-5, 5), integer(1, 4));
      v.canonicalize();
    }
    return Q(p, std::move(c));
  }
  template <Scalar S>
  Polynomial<S> poly(const ParamsPtr<S>& p, int degree, bool monic) {
    std::vector<Element<S>> c;
    for (int k = 0; k < degree; ++k) c.push_back(element(p));
    c.push_back(monic ? Element<S>::scalar(p, S(1)) : element(p));
    if (!monic && c.back().is_zero(0.0)) c.back() = Element<S>::scalar(p, S(1));
    return Polynomial<S>(p, std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

Outcome algebras() {
  auto h = make_params<Rational>(Form::Gamma, 0, {-1, -1}, 2);
  auto split = make_params<Rational>(Form::Gamma, 0, {-1, 1}, 2);
  if (!h->is_division_algebra()) return bad("(-1,-1) is not a division algebra");
  if (split->is_locally_complex()) return bad("(-1,1) reported locally complex");
  const Q x = Q::basis(split, 1) + Q::basis(split, 2);
  if (trace(x) != 0 || norm(x) != 0) return bad("split e1+e2 has trace " + str(trace(x)) + ", norm " + str(norm(x)));
  try {
    inverse(x);
    return bad("split e1+e2 was inverted");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInvertible) throw;
  }
  return ok();
}

Outcome mu_form_conjugate() {
  auto p = make_params<Rational>(Form::Mu, 5, {}, 1);
  const Q b = Q::basis(p, 1, Rational(7, 3));
  const Q expect(p, {Rational(7, 3), Rational(-7, 3)});
  return conj(b) == expect ? ok() : bad("conj gave " + str(conj(b)));
}

Outcome sedenion_zero_divisors() {
  auto s = main_sequence<Rational>(4);
  const Q a = Q::basis(s, 1) + Q::basis(s, 10);
  const Q b = Q::basis(s, 7) + Q::basis(s, 12);
  if (!(a * b).is_zero()) return bad("ab = " + str(a * b));
  if (norm(a) != 2) return bad("norm(a) = " + str(norm(a)));
  if (b * b != Q::scalar(s, -2)) return bad("b^2 = " + str(b * b));
  if (!(char_poly(b) == QuadraticClass<Rational>{0, 2})) return bad("char poly of b");
  if (quadratically_equivalent(a, Q(s))) return bad("a equivalent to 0");
  if (!quadratically_equivalent(a, conj(a))) return bad("a not equivalent to conj(a)");
  return ok();
}

Outcome alternativity() {
  for (int level = 1; level <= 5; ++level) {
    auto p = main_sequence<Rational>(level);
    for (std::size_t m = 0; m < p->dim(); ++m)
      if (!is_alternative(Q::basis(p, m))) return bad("basis e" + std::to_string(m) + " at level " + std::to_string(level));
    for (std::size_t k = 0; 2 * k + 1 < p->dim(); ++k)
      if (!is_alternative(Q::basis(p, 2 * k, 3) + Q::basis(p, 2 * k + 1, -2)))
        return bad("pair " + std::to_string(k) + " at level " + std::to_string(level));
  }
  return ok();
}

Outcome equivalence_by_re_im() {
  auto o = main_sequence<double>(3);
  Gen g(3);
  for (int t = 0; t < 50; ++t) {
    const D a = g.element(o);
    // rotate the imaginary part into another direction of the same length
    const D b = D::scalar(o, re(a)) + D::basis(o, 5, abs(im(a)));
    if (!quadratically_equivalent(a, b, 1e-12)) return bad("equal re and |im| but not equivalent");
    const D c = b + D::basis(o, 0, 0.25);
    if (quadratically_equivalent(a, c, 1e-12)) return bad("shifted real part still equivalent");
  }
  return ok();
}

Outcome sedenion_linear() {
  auto s = main_sequence<Rational>(4);
  const Q a = Q::basis(s, 1) + Q::basis(s, 10);
  const Q b = Q::basis(s, 7) + Q::basis(s, 12);
  const PQ f(s, {Q(s), a});
  if (!eval(f, b).is_zero()) return bad("f(b) = " + str(eval(f, b)));
  if (companion(f) != CentralPolynomial<Rational>({0, 0, 2})) return bad("C_f = " + str(companion(f)));
  const auto r = spherical_classes(f);
  if (!r.classes.empty()) return bad("spherical class found");
  if (r.central_roots != std::vector<Rational>{0}) return bad("central roots differ from {0}");
  return ok();
}

Outcome sedenion_quadratic() {
  auto s = main_sequence<Rational>(4);
  const Q a = Q::basis(s, 1) + Q::basis(s, 10);
  const Q b = Q::basis(s, 7) + Q::basis(s, 12);
  const PQ g(s, {Q::scalar(s, 2), a, Q::scalar(s, 1)});
  const auto cg = companion(g);
  if (cg != CentralPolynomial<Rational>({4, 0, 6, 0, 1})) return bad("C_g = " + str(cg));
  if (!eval(g, b).is_zero()) return bad("g(b) = " + str(eval(g, b)));
  if (eval(cg, b) != Q::scalar(s, -4)) return bad("C_g(b) = " + str(eval(cg, b)));
  if (!spherical_classes(g).classes.empty()) return bad("spherical class found");
  return ok();
}

Outcome quaternion_cubic() {
  auto h = main_sequence<Rational>(2);
  const Q one = Q::scalar(h, 1), i = Q::basis(h, 1), j = Q::basis(h, 2), k = Q::basis(h, 3);
  const PQ f = PQ::linear_factor(i) * PQ::linear_factor(j) * PQ::linear_factor(k);
  if (f != PQ(h, {one, i - j + k, -(i + j + k), one})) return bad("expansion " + str(f));
  const CentralPolynomial<Rational> q({1, 0, 1});
  if (companion(f) != q * q * q) return bad("C_f = " + str(companion(f)));
  const auto d = divrem_quadratic(PQ::central(h, q * q * q), QuadraticClass<Rational>{0, 1});
  if (!d.linear.is_zero() || !d.constant.is_zero()) return bad("(x^2+1)^3 not divisible by x^2+1");
  const PQ df = derivative(f);
  if (df != PQ(h, {i - j + k, (i + j + k) * Rational(-2), Q::scalar(h, 3)})) return bad("f' = " + str(df));
  if (companion(df) != CentralPolynomial<Rational>({3, -4, 12, 0, 9})) return bad("C_f' = " + str(companion(df)));
  return ok();
}

Outcome quaternion_cubic_radii() {
  auto h = main_sequence<double>(2);
  const PD f = PD::linear_factor(D::basis(h, 1)) * PD::linear_factor(D::basis(h, 2)) * PD::linear_factor(D::basis(h, 3));
  const auto cf = complex_roots(companion(f));
  for (const auto& c : cf.clusters)
    if (std::fabs(std::abs(c.center) - 1) > 1e-9) return bad("companion root of modulus " + str(std::abs(c.center)));
  const double rf = rho_estimate(f).rho, rdf = rho_estimate(derivative(f)).rho;
  if (std::fabs(rf - 1) > 1e-9) return bad("rho(f) = " + str(rf));
  if (!(rdf > 1 + 1e-6)) return bad("rho(f') = " + str(rdf));
  // The companion of f' has roots on both sides of the unit circle: their
  // product is 3/9.
  double lo = 1e300, hi = 0;
  for (const auto& c : complex_roots(companion(derivative(f))).clusters) {
    lo = std::min(lo, std::abs(c.center));
    hi = std::max(hi, std::abs(c.center));
  }
  std::ostringstream os;
  os << "rho(f) = " << rf << ", rho(f') = " << rdf << ", C_f' moduli in [" << lo << ", " << hi << "]";
  if (!(lo < 1 && hi > 1)) return bad(os.str());
  return ok(os.str());
}

Outcome leibniz() {
  Gen g(7);
  for (int level = 1; level <= 4; ++level) {
    auto p = main_sequence<Rational>(level);
    for (int t = 0; t < 5; ++t) {
      const PQ a = g.poly(p, 3, false), b = g.poly(p, 2, false);
      if (derivative(a * b) != derivative(a) * b + a * derivative(b)) return bad("level " + std::to_string(level));
    }
  }
  return ok();
}

Outcome split_factors() {
  auto sq = split_quaternions<Rational>();
  const Q one = Q::scalar(sq, 1);
  const PQ f = PQ::linear_factor(one) * PQ::linear_factor(Q(sq)) * PQ::linear_factor(-one);
  for (const QuadraticClass<Rational>& q : {QuadraticClass<Rational>{-1, 0}, {0, -1}, {1, 0}}) {
    const auto d = divrem_quadratic(f, q);
    if (!d.linear.is_zero() || !d.constant.is_zero())
      return bad("x^2 - " + str(q.trace) + "x + " + str(q.norm) + " does not divide");
  }
  if (central_roots(f, {-2, -1, 0, 1, 2}) != std::vector<Rational>{-1, 0, 1}) return bad("central roots");
  return ok("three quadratic factors of a cubic");
}

Outcome constructed_spherical() {
  Gen g(11);
  for (int level = 2; level <= 4; ++level) {
    auto p = main_sequence<Rational>(level);
    for (int t = 0; t < 5; ++t) {
      const Q lambda = g.element(p);
      if (lambda.is_scalar()) continue;
      const auto q = char_poly(lambda);
      const PQ f = poly_mul(g.poly(p, 2, false), quadratic(q));
      if (!is_spherical_root(f, q).spherical) return bad("level " + std::to_string(level));
    }
  }
  return ok();
}

Outcome even_degree_factorization() {
  auto o = main_sequence<Rational>(3);
  Gen g(13);
  const Q c = g.element(o);
  const CentralPolynomial<Rational> q1({2, -2, 1}), q2({5, 0, 1});
  const PQ f = poly_scale(c, PQ::central(o, q1 * q2));
  const auto r = spherical_factorization(f);
  if (r.classes.size() != 2) return bad(std::to_string(r.classes.size()) + " classes");
  if (r.remainder != PQ(o, {c})) return bad("remainder " + str(r.remainder));
  return ok();
}

Outcome slice_segment() {
  auto h = main_sequence<double>(2);
  const PD f(h, {D(h), D::scalar(h, 1), D::basis(h, 1)});
  const SliceDirection perp(D::basis(h, 2));
  const auto flat = slice_project(f, perp);
  if (flat.coeffs.size() != 2 || std::abs(flat.coeffs[1] - Complex(1, 0)) > 1e-15) return bad("f_I for I orthogonal to i");
  for (double alpha : {0.8, 0.3, 0.05}) {
    const D I = D::basis(h, 1) * alpha + D::basis(h, 2) * std::sqrt(1 - alpha * alpha);
    const auto s = make_slice(f, SliceDirection(I));
    if (std::fabs(hull_diameter(s.hull) - 1 / alpha) > 1e-6 / alpha)
      return bad("segment length " + str(hull_diameter(s.hull)) + " for alpha " + str(alpha));
  }
  if (in_snail(f, -D::basis(h, 1), 1e-7).verdict != HullVerdict::Outside) return bad("-i not outside");
  if (in_snail(f, D::basis(h, 1) * 0.5, 1e-7).verdict != HullVerdict::Inside) return bad("i/2 not inside");
  return ok();
}

Outcome boundary_example() {
  auto h = main_sequence<double>(2);
  const D one = D::scalar(h, 1), i = D::basis(h, 1), j = D::basis(h, 2);
  const PD f = PD(h, {-one, D(h), one}) * PD::linear_factor(i) * PD::linear_factor(i) + PD(h, {j});
  const auto m = in_snail(f, i, 1e-7);
  return m.verdict == HullVerdict::Boundary ? ok() : bad(std::string("verdict ") + std::string(to_string(m.verdict)));
}

Outcome monic_slices_bounded() {
  Gen g(17);
  auto o = main_sequence<double>(3);
  for (int t = 0; t < 10; ++t) {
    const PD f = g.poly(o, g.integer(1, 5), true);
    const Bounds b = bounds(f);
    for (const auto& s : snail_sample(f, 16, static_cast<std::uint64_t>(t)))
      for (const Complex& v : s.hull)
        if (std::abs(v) > b.r3 + 1e-9) return bad("hull vertex beyond R3");
    if (rho_estimate(f).rho > b.r3 + 1e-9) return bad("rho(f) > R3");
    if (f.degree() >= 2 && rho_estimate(derivative(f)).rho > b.r3 + 1e-9) return bad("rho(f') > R3");
  }
  return ok();
}

Outcome bounds_refused() {
  auto s = main_sequence<double>(4);
  const PD f(s, {D(s), D(s), D::basis(s, 1) + D::basis(s, 10)});
  try {
    bounds(f);
  } catch (const Error& e) {
    return e.code() == ErrorCode::NonMonicHighLevel ? ok() : bad(e.what());
  }
  return bad("bounds accepted a non-monic sedenion polynomial");
}

Outcome octonion_quadratics() {
  Gen g(19);
  auto o = main_sequence<double>(3);
  for (int t = 0; t < 20; ++t) {
    const D a = g.element(o), b = g.element(o), c = g.element(o);
    if (c.is_zero()) continue;
    const PD f = poly_scale(c, PD::linear_factor(a)) * PD::linear_factor(b);
    const auto r = gauss_lucas_quadratic_check(f, 1e-9);
    if (!(r.critical_point - (a + b) * 0.5).is_zero(1e-9)) return bad("critical point is not (a+b)/2");
    if (r.verdict == HullVerdict::Outside) return bad("critical point outside the companion hull");
  }
  return ok();
}

Outcome sedenion_counterexample() {
  auto s = main_sequence<double>(4);
  const D a = D::basis(s, 1) + D::basis(s, 10), b = D::basis(s, 7) + D::basis(s, 12);
  const PD f(s, {D(s), D(s), a});
  if (!eval(derivative(f), b).is_zero()) return bad("b is not a root of f'");
  if (companion_hull_membership(f, b) != HullVerdict::Outside) return bad("b inside the hull {0}");
  return ok("critical point b escapes the hull {0}");
}

Outcome critical_points_in_snail() {
  Gen g(23);
  for (int level = 2; level <= 3; ++level) {
    auto p = main_sequence<double>(level);
    for (int t = 0; t < 10; ++t) {
      const PD f = g.poly(p, g.integer(2, 4), true);
      const auto cat = find_roots(derivative(f));
      for (const auto& r : cat.isolated)
        if (in_snail(f, r, 1e-7).verdict == HullVerdict::Outside) return bad("isolated critical point outside");
      if (!gauss_lucas_spherical_check(f, 1e-7).pass) return bad("spherical critical class outside");
    }
  }
  return ok();
}

Outcome jensen() {
  Gen g(29);
  auto o = main_sequence<double>(3);
  for (int t = 0; t < 10; ++t) {
    std::vector<D> c;
    const int n = g.integer(2, 6);
    for (int k = 0; k < n; ++k) c.push_back(D::scalar(o, g.real()));
    c.push_back(D::scalar(o, 1));
    const PD f(o, std::move(c));
    if (!jensen_check(f).pass) return bad("class outside every Jensen sphere of f");
    if (!jensen_check_companion(f).pass) return bad("class outside every Jensen sphere of C_f");
  }
  return ok();
}

}  // namespace

std::vector<CheckResult> run_worked_examples() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> cases = {
      {"quaternion and split-quaternion algebras", algebras},
      {"mu-form conjugation", mu_form_conjugate},
      {"sedenion zero divisors", sedenion_zero_divisors},
      {"alternative basis elements and pairs", alternativity},
      {"equivalence by real part and imaginary length", equivalence_by_re_im},
      {"sedenion a x has root b, C_f = 2x^2", sedenion_linear},
      {"sedenion x^2 + a x + 2: g(b) = 0, C_g(b) = -4", sedenion_quadratic},
      {"quaternion cubic expansion and companion", quaternion_cubic},
      {"quaternion cubic spectral radii", quaternion_cubic_radii},
      {"Leibniz rule", leibniz},
      {"split-quaternion cubic factors", split_factors},
      {"constructed spherical roots", constructed_spherical},
      {"even degree spherical factorization", even_degree_factorization},
      {"i x^2 + x slice segments", slice_segment},
      {"boundary critical point", boundary_example},
      {"monic slices inside R3", monic_slices_bounded},
      {"bounds refuse non-monic sedenion input", bounds_refused},
      {"octonion quadratic critical point", octonion_quadratics},
      {"sedenion critical point outside the hull", sedenion_counterexample},
      {"critical points in the snail", critical_points_in_snail},
      {"Jensen spheres", jensen},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, run] : cases) {
    try {
      Outcome o = run();
      out.push_back({name, o.pass, std::move(o.detail)});
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  }
  return out;
}

}  // namespace cdpoly
